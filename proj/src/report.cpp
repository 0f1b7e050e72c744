#include "ktrans/report.hpp"

#include <sstream>

namespace ktrans {

const char* const kToolVersion = "0.1.0";

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ReportedDiscrepancy: return "reported-discrepancy";
  }
  return "?";
}

bool Report::all_pass() const {
  for (const auto& [n, v] : verdicts)
    if (v != Verdict::Pass) return false;
  return true;
}

Json Report::to_json() const {
  Json j;
  j["tool"] = "ktrans";
  j["version"] = kToolVersion;
  j["command"] = command;
  if (!group.empty()) j["group"] = group;
  j["results"] = results;
  Json v = Json::array();
  for (const auto& [n, x] : verdicts) v.push_back({{"check", n}, {"verdict", ktrans::to_string(x)}});
  j["verdicts"] = v;
  j["all_pass"] = all_pass();
  j["assumption"] = kMultiplicityNote;
  return j;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json optional_json(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

Json to_json(const GroupDatum& g) {
  Json j;
  j["spec"] = to_string(g.spec);
  j["name"] = g.name;
  j["kind"] = to_string(g.kind);
  j["r"] = g.r;
  j["a"] = g.a;
  j["b"] = g.b;
  j["d"] = g.d;
  j["p"] = g.p;
  j["d1"] = g.d1;
  j["a1"] = g.a1;
  j["b1"] = g.b1;
  Json v = Json::array();
  for (const auto& f : g.vmrt) v.push_back({{"rank", f.rank}, {"a", f.a}, {"b", f.b}, {"dim", f.dim}, {"genus", f.genus}});
  j["vmrt"] = v;
  j["rho_g"] = g.rho_g;
  j["rho1"] = g.rho1;
  j["rho2"] = g.rho2;
  return j;
}

Json to_json(const KType& t) {
  Json j;
  j["label"] = label(t);
  j["mu1"] = t.mu1;
  if (t.is_rank_two()) j["mu2"] = t.mu2;
  j["l"] = t.l;
  return j;
}

Json to_json(const Edge& e) {
  return {{"source", label(e.source)}, {"target", label(e.target)}, {"sigma", sigma_string(e)}, {"lshift", e.lshift}};
}

Json to_json(const TransitionCoefficient& c) {
  return {{"prefactor", rational_json(c.prefactor)},
          {"intercept", rational_json(c.affine.intercept)},
          {"c_ratio", rational_json(c.c_ratio)},
          {"provenance", to_string(c.provenance)}};
}

Json to_json(const CheckReport& r) {
  Json a = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    a.push_back(x);
  }
  return {{"checks", a}, {"all_pass", r.all_pass()}};
}

Json to_json(const DualityReport& r) { return {{"formula", r.formula}, {"value", rational_json(r.lhs)}, {"holds", r.holds}}; }

Json to_json(const Reducibility& r) {
  Json j{{"reducible", r.reducible}, {"theorem_branch", r.theorem_branch}, {"citation", r.citation}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  if (r.witness) j["witness_in_candidate_graph"] = r.witness_listed;
  return j;
}

Json to_json(const ComplementaryScan& s) {
  Json j;
  j["computed_delta"] = optional_json(s.computed_delta);
  j["table_delta"] = optional_json(s.table_delta);
  j["agrees"] = s.agrees;
  j["binding_edge"] = s.binding_edge ? to_json(*s.binding_edge) : Json(nullptr);
  j["bound"] = s.bound;
  j["edges_scanned"] = s.edges_scanned;
  if (s.with_l_only_moves) j["computed_delta_with_l_only_moves"] = optional_json(*s.with_l_only_moves);
  j["note"] = kMultiplicityNote;
  return j;
}

Json to_json(const SchurTable& t) {
  Json c = Json::object();
  for (const auto& [k, v] : t.constants) c[label(k)] = to_string(v);
  Json cut = Json::array(), bad = Json::array(), un = Json::array();
  for (const auto& e : t.cut_edges) cut.push_back(to_json(e));
  for (const auto& e : t.inconsistent_edges) bad.push_back(to_json(e));
  for (const auto& k : t.unreached) un.push_back(label(k));
  return {{"consistent", t.consistent}, {"all_positive", t.all_positive}, {"partial", t.partial},
          {"checked_cycles", t.checked_cycles}, {"constants", c}, {"cut_edges", cut},
          {"inconsistent_edges", bad}, {"unreached", un}, {"note", kMultiplicityNote}};
}

namespace {

Json set_json(const SubrepSet& s) {
  Json leaks = Json::array();
  for (const auto& e : s.leaks) leaks.push_back(to_json(e));
  return {{"name", s.name}, {"predicate", s.predicate}, {"size", s.size}, {"closed", s.closed}, {"leaks", leaks}};
}

}  // namespace

Json to_json(const SubrepReport& r) {
  Json rs = Json::array();
  for (const auto& x : r.readings)
    rs.push_back({{"reading", to_string(x.reading)}, {"closed", x.closed()}, {"plus", set_json(x.plus)}, {"minus", set_json(x.minus)}});
  Json closed = Json::array();
  for (auto c : r.closed_readings) closed.push_back(to_string(c));
  return {{"nu", rational_json(r.nu)}, {"bound", r.bound}, {"readings", rs}, {"closed_readings", closed},
          {"note", kMultiplicityNote}};
}

Json to_json(const std::vector<Component>& comps) {
  Json a = Json::array();
  for (const auto& c : comps) {
    Json n = Json::array();
    for (const auto& k : c.nodes) n.push_back(label(k));
    a.push_back({{"size", c.nodes.size()}, {"touches_boundary", c.touches_boundary}, {"nodes", n}});
  }
  return a;
}

Json to_json(const LemmaA1Report& r) {
  return {{"m", r.m}, {"l", r.l}, {"form", to_string(r.form)},
          {"e_plus_phi", r.e_plus_phi}, {"e_minus_phi", r.e_minus_phi},
          {"e_plus_psi_expl", r.e_plus_psi_expl}, {"e_minus_psi_expl", r.e_minus_psi_expl},
          {"remark_e_plus_psi", r.remark_e_plus_psi}, {"remark_e_minus_psi", r.remark_e_minus_psi},
          {"exact", {{"a_plus", rational_json(r.a_plus)}, {"b_plus", rational_json(r.b_plus)},
                     {"a_minus", rational_json(r.a_minus)}, {"b_minus", rational_json(r.b_minus)},
                     {"plus_decomposes", r.plus_decomposes}, {"minus_decomposes", r.minus_decomposes}}}};
}

namespace {

Json row_json(const Theorem5Row& r) {
  return {{"source", label(r.source)}, {"target", label(r.target)}, {"sigma", r.sigma}, {"lshift", r.lshift},
          {"model_c", rational_json(r.model_c)}, {"model_intercept", optional_json(r.model_intercept)},
          {"formula_intercept", rational_json(r.formula_intercept)}, {"intercept_ok", r.intercept_ok}, {"c_ok", r.c_ok}};
}

}  // namespace

Json to_json(const Theorem5Report& r) {
  Json bad = Json::array(), un = Json::array();
  for (const auto& x : r.rows)
    if (!x.intercept_ok || !x.c_ok) bad.push_back(row_json(x));
  for (const auto& x : r.unlisted)
    un.push_back({{"source", label(x.source)}, {"target", label(x.target)}, {"model_c", rational_json(x.model_c)},
                  {"model_intercept", optional_json(x.model_intercept)}});
  return {{"checked", r.checked}, {"failures", r.failures}, {"failed_rows", bad}, {"unlisted_terms", un}};
}

Json to_json(const Laurent1& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({e[0], to_string(c.re), to_string(c.im)});
  return a;
}

GraphFormat parse_graph_format(const std::string& s) {
  if (s == "dot") return GraphFormat::Dot;
  if (s == "json") return GraphFormat::Json;
  if (s == "csv") return GraphFormat::Csv;
  throw std::invalid_argument("unknown graph format " + s);
}

std::string emit_graph(const KTypeGraph& g, GraphFormat f) {
  std::ostringstream os;
  if (f == GraphFormat::Dot) {
    os << "digraph ktypes {\n";
    os << "  // " << kMultiplicityNote << "\n";
    for (const auto& n : g.nodes) os << "  \"" << label(n) << "\";\n";
    for (const auto& e : g.edges) {
      os << "  \"" << label(e.edge.source) << "\" -> \"" << label(e.edge.target) << "\" [label=\"" << to_string(e.weight)
         << "\"";
      if (e.weight == 0) os << ", style=dashed, color=red";
      os << "];\n";
    }
    os << "}\n";
  } else if (f == GraphFormat::Csv) {
    os << "src,dst,sigma,lshift,c,intercept,A\n";
    for (const auto& e : g.edges)
      os << '"' << label(e.edge.source) << "\",\"" << label(e.edge.target) << "\"," << sigma_string(e.edge) << ','
         << e.edge.lshift << ',' << to_string(e.coeff.c_ratio) << ',' << to_string(e.coeff.affine.intercept) << ','
         << to_string(e.weight) << '\n';
  } else {
    Json j;
    j["group"] = to_json(g.group);
    j["nu"] = rational_json(g.nu);
    j["bound"] = g.bound;
    Json nodes = Json::array();
    for (const auto& n : g.nodes) nodes.push_back({{"label", label(n)}, {"interior", g.interior(n)}});
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges) {
      Json x = to_json(e.edge);
      x["coefficient"] = to_json(e.coeff);
      x["A"] = rational_json(e.weight);
      edges.push_back(x);
    }
    j["edges"] = edges;
    j["note"] = kMultiplicityNote;
    os << j.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace ktrans
