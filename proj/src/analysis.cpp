#include "ktrans/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ktrans/disk_oracle.hpp"

namespace ktrans {

const char* const kMultiplicityNote =
    "edge weights relate spherical vectors only; conclusions about full K-types assume each target occurs "
    "with multiplicity one in W_{mu,l} tensor p^{+-}";

const GraphEdge* KTypeGraph::find(const KType& s, const KType& t) const {
  for (const auto& e : edges)
    if (e.edge.source == s && e.edge.target == t) return &e;
  return nullptr;
}

namespace {

// c-ratio without the optional cross-oracle evaluation.
Rational edge_c(const GroupDatum& g, const Edge& e) {
  if (g.kind == LatticeKind::Generic2 || g.kind == LatticeKind::ProductSU)
    return c_ratio_gamma(g, e.source, e.sigma1, e.sigma2, e.lshift);
  return c_ratio_oracle(g, e.source, e.sigma1, e.sigma2, e.lshift);
}

}  // namespace

KTypeGraph build_graph(const GroupDatum& g, const Rational& nu, long bound) {
  KTypeGraph gr;
  gr.group = g;
  gr.nu = nu;
  gr.bound = bound;
  gr.nodes = enumerate(g, bound);
  for (std::size_t i = 0; i < gr.nodes.size(); ++i) gr.index[gr.nodes[i]] = i;
  for (const auto& s : gr.nodes)
    for (const auto& e : neighbors(g, s)) {
      if (!gr.index.count(e.target)) continue;
      GraphEdge ge;
      ge.edge = e;
      ge.coeff = transition_coefficient(g, e);
      ge.weight = ge.coeff.value(nu);
      gr.edges.push_back(std::move(ge));
    }
  return gr;
}

std::vector<Rational> edge_zero_locus(const GroupDatum& g, long bound, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  for (const auto& s : enumerate(g, bound))
    for (const auto& e : neighbors(g, s)) {
      Rational z = -affine_factor(g, e).intercept;
      if (z >= lo && z <= hi) out.push_back(z);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Reducibility reducibility_predicate(const GroupDatum& g, const Rational& nu) {
  Reducibility r;
  if (g.kind == LatticeKind::Generic2 || g.kind == LatticeKind::ProductSU) {
    r.theorem_branch = true;
    r.citation = "reducible iff nu is an even integer with nu >= 2 rho1 + 2 or nu <= 2 rho2 - 2";
    bool even = is_integer(nu) && to_long(nu) % 2 == 0;
    r.reducible = even && (nu >= 2 * g.rho1 + 2 || nu <= 2 * g.rho2 - 2);
    if (r.reducible) {
      // Exhibit a vanishing edge as a witness.
      long b = std::max<long>(4, std::labs(to_long(nu)) + 2 * g.rho_g + 2);
      for (const auto& s : enumerate(g, b)) {
        for (const auto& e : neighbors(g, s))
          if (affine_factor(g, e).at(nu) == 0) {
            r.witness = e;
            break;
          }
        if (r.witness) break;
      }
    }
    return r;
  }
  r.theorem_branch = false;
  r.citation = "candidate reduction point: nu is a zero of some edge's affine factor (the even integers nu = -2k are among them)";
  if (!is_integer(nu)) return r;
  long b = std::labs(to_long(nu)) + 2 * g.rho_g + 2;
  for (const auto& s : enumerate(g, b)) {
    for (const auto& t : model_action(g, s)) {
      auto ic = t.intercept();
      if (!ic || *ic != -nu) continue;
      Edge e{s, t.target, t.target.mu1 > s.mu1 ? 1 : (t.target.mu1 < s.mu1 ? -1 : 0), 1, static_cast<int>(t.target.l - s.l)};
      bool listed = false;
      for (const auto& c : neighbors(g, s)) listed = listed || c.target == t.target;
      if (!r.witness || (listed && !r.witness_listed)) {
        r.witness = e;
        r.witness_listed = listed;
      }
      r.reducible = true;
    }
    if (r.reducible && r.witness_listed) break;
  }
  return r;
}

bool intertwining_equivalent(const GroupDatum& g, const Rational& nu, const Rational& nu2) {
  return nu == nu2 || nu + nu2 == 2 * g.rho_g;
}

ComplementaryScan complementary_scan_once(const GroupDatum& g, long bound) {
  ComplementaryScan sc;
  sc.bound = bound;
  sc.table_delta = complementary_table_value(g);
  std::vector<KType> nodes = enumerate(g, bound);
  std::map<KType, bool> in;
  for (const auto& n : nodes) in[n] = true;
  Rational center(g.rho_g);
  std::optional<Rational> lo, hi;
  for (const auto& s : nodes)
    for (const auto& e : neighbors(g, s)) {
      if (!in.count(e.target)) continue;
      Edge rev = e.reversed();
      Rational cf = edge_c(g, e), cr = edge_c(g, rev);
      if (cf <= 0 || cr <= 0) throw std::logic_error("non-positive c-ratio on admissible edge " + to_string(e));
      ++sc.edges_scanned;
      // A_fwd(nu) A_rev(nu) = pref^2 cf cr (nu + If)(nu + Ir) < 0 between the roots.
      Rational r1 = -affine_factor(g, e).intercept, r2 = -affine_factor(g, rev).intercept;
      Rational a = std::min(r1, r2), b = std::max(r1, r2);
      if (!lo || a > *lo) lo = a;
      if (!hi || b < *hi) hi = b;
      Rational half = (b - a) / 2;
      if (!sc.binding_edge || half < sc.computed_delta.value_or(half + 1)) {
        sc.binding_edge = e;
        sc.computed_delta = half;
      }
    }
  if (!lo) {
    sc.computed_delta.reset();
  } else if (*hi <= *lo || *lo >= center || *hi <= center) {
    sc.computed_delta.reset();
  } else {
    sc.computed_delta = std::min(center - *lo, *hi - center);
  }
  if (g.kind == LatticeKind::SpDoubled) {
    std::optional<Rational> w = sc.computed_delta;
    for (const auto& s : nodes)
      for (const auto& t : model_action(g, s)) {
        bool listed = false;
        for (const auto& c : neighbors(g, s)) listed = listed || c.target == t.target;
        if (listed || !in.count(t.target) || !t.intercept()) continue;
        Rational d = center + *t.intercept();
        if (d < 0) d = -d;
        if (d == 0)
          w.reset();
        else if (w && d < *w)
          w = d;
        if (!w) break;
      }
    sc.with_l_only_moves = w;
  }
  sc.agrees = sc.computed_delta == sc.table_delta;
  return sc;
}

ComplementaryScan complementary_scan(const GroupDatum& g, long bound) {
  ComplementaryScan a = complementary_scan_once(g, bound);
  ComplementaryScan b = complementary_scan_once(g, bound + 2);
  if (a.computed_delta != b.computed_delta)
    throw UnstableBound("complementary scan changed between bound " + std::to_string(bound) + " and " + std::to_string(bound + 2));
  return a;
}

SchurTable schur_constants(const GroupDatum& g, const Rational& nu, long bound) {
  SchurTable tab;
  KTypeGraph gr = build_graph(g, nu, bound);
  std::map<std::pair<KType, KType>, Rational> w;
  for (const auto& e : gr.edges) w[{e.edge.source, e.edge.target}] = e.weight;
  auto weight = [&](const KType& s, const KType& t) -> std::optional<Rational> {
    auto it = w.find({s, t});
    if (it == w.end()) return std::nullopt;
    return it->second;
  };
  KType root = spherical(g);
  tab.constants[root] = 1;
  std::deque<KType> queue{root};
  std::map<std::pair<KType, KType>, bool> tree;
  while (!queue.empty()) {
    KType s = queue.front();
    queue.pop_front();
    for (const auto& e : gr.edges) {
      if (e.edge.source != s) continue;
      const KType& t = e.edge.target;
      if (tab.constants.count(t)) continue;
      auto back = weight(t, s);
      if (e.weight == 0 || !back || *back == 0) continue;
      // A(s->t) S(t) = -A(t->s) S(s)
      tab.constants[t] = -(*back) * tab.constants[s] / e.weight;
      tree[{s, t}] = tree[{t, s}] = true;
      queue.push_back(t);
    }
  }
  for (const auto& n : gr.nodes)
    if (!tab.constants.count(n)) tab.unreached.push_back(n);
  for (const auto& e : gr.edges) {
    const KType &s = e.edge.source, &t = e.edge.target;
    auto back = weight(t, s);
    bool zero = e.weight == 0 || !back || *back == 0;
    if (zero) {
      if (s < t) tab.cut_edges.push_back(e.edge);
      continue;
    }
    if (tree.count({s, t}) || !(s < t)) continue;
    if (!tab.constants.count(s) || !tab.constants.count(t)) continue;
    ++tab.checked_cycles;
    if (e.weight * tab.constants[t] != -(*back) * tab.constants[s]) {
      tab.consistent = false;
      tab.inconsistent_edges.push_back(e.edge);
    }
  }
  tab.partial = !tab.unreached.empty() || !tab.cut_edges.empty();
  for (const auto& [k, v] : tab.constants) tab.all_positive = tab.all_positive && v > 0;
  return tab;
}

std::string to_string(SubrepReading r) { return r == SubrepReading::MuDifference ? "mu1-mu2" : "mu1-nu"; }

SubrepReport unitarizable_subreps(const GroupDatum& g, const Rational& nu, long bound) {
  if (g.kind != LatticeKind::Generic2 && g.kind != LatticeKind::ProductSU)
    throw PreconditionFailed("unitarizable subrepresentations are described for rank-two lattices only");
  Reducibility red = reducibility_predicate(g, nu);
  if (!red.reducible) throw PreconditionFailed("nu = " + to_string(nu) + " is not a reduction point");
  SubrepReport rep;
  rep.nu = nu;
  rep.bound = bound;
  KTypeGraph gr = build_graph(g, nu, bound);
  Rational cplus = -nu + 2 * g.rho1, cminus = -nu + 2 * g.rho2;
  for (SubrepReading reading : {SubrepReading::MuDifference, SubrepReading::LiteralNu}) {
    auto x = [&](const KType& t) { return reading == SubrepReading::MuDifference ? Rational(t.mu1 - t.mu2) : Rational(t.mu1) - nu; };
    SubrepReadingResult res;
    res.reading = reading;
    std::string lhs = reading == SubrepReading::MuDifference ? "mu1-mu2" : "mu1-nu";
    res.plus = {"S+", lhs + " >= " + to_string(cplus), 0, true, {}};
    res.minus = {"S-", lhs + " <= " + to_string(cminus), 0, true, {}};
    auto in_plus = [&](const KType& t) { return x(t) >= cplus; };
    auto in_minus = [&](const KType& t) { return x(t) <= cminus; };
    for (const auto& n : gr.nodes) {
      res.plus.size += in_plus(n);
      res.minus.size += in_minus(n);
    }
    for (const auto& e : gr.edges) {
      if (!gr.interior(e.edge.source) || e.weight == 0) continue;
      if (in_plus(e.edge.source) && !in_plus(e.edge.target)) {
        res.plus.closed = false;
        if (res.plus.leaks.size() < 8) res.plus.leaks.push_back(e.edge);
      }
      if (in_minus(e.edge.source) && !in_minus(e.edge.target)) {
        res.minus.closed = false;
        if (res.minus.leaks.size() < 8) res.minus.leaks.push_back(e.edge);
      }
    }
    if (res.closed()) rep.closed_readings.push_back(reading);
    rep.readings.push_back(res);
  }
  return rep;
}

std::vector<Component> composition_candidates(const GroupDatum& g, const Rational& nu, long bound) {
  KTypeGraph gr = build_graph(g, nu, bound);
  std::size_t n = gr.nodes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : gr.edges)
    if (e.weight != 0) adj[gr.index.at(e.edge.source)].push_back(gr.index.at(e.edge.target));

  // Tarjan; components come out in reverse topological order.
  std::vector<long> idx(n, -1), low(n, 0);
  std::vector<bool> on(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  long counter = 0;
  std::function<void(std::size_t)> strong = [&](std::size_t v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t w : adj[v]) {
      if (idx[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      std::vector<std::size_t> c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        c.push_back(w);
      } while (w != v);
      comps.push_back(std::move(c));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (idx[v] < 0) strong(v);
  std::reverse(comps.begin(), comps.end());
  std::vector<Component> out;
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    Component comp;
    for (std::size_t v : c) {
      comp.nodes.push_back(gr.nodes[v]);
      comp.touches_boundary = comp.touches_boundary || !gr.interior(gr.nodes[v]);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace ktrans
