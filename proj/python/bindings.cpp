#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ktrans/cli.hpp"
#include "ktrans/report.hpp"

namespace py = pybind11;
using namespace ktrans;

namespace {

KType make_ktype(const GroupDatum& g, const std::vector<long>& mu, long l) {
  KType t = mu.size() == 2 ? KType::rank_two(g.kind, mu[0], mu[1], l) : KType::rank_one(g.kind, mu.at(0), l);
  if (t.is_rank_two() != (mu.size() == 2)) throw IllegalParameters("wrong number of weight entries");
  if (!is_admissible(g, t)) throw IllegalParameters("inadmissible K-type " + to_string(t));
  return t;
}

Edge make_edge(const GroupDatum& g, const std::vector<long>& mu, long l, const std::vector<int>& sigma, int lshift) {
  KType s = make_ktype(g, mu, l);
  int s1 = sigma.at(0), s2 = sigma.size() > 1 ? sigma[1] : 1;
  return Edge{s, shifted(s, s1, s2, lshift), s1, s2, lshift};
}

}  // namespace

PYBIND11_MODULE(_ktrans, m) {
  m.doc() = "Exact transition coefficients";
  py::register_exception<IllegalParameters>(m, "IllegalParameters", PyExc_ValueError);
  py::register_exception<InadmissibleTarget>(m, "InadmissibleTarget", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_ValueError);
  py::register_exception<UnstableBound>(m, "UnstableBound", PyExc_RuntimeError);

  m.attr("version") = kToolVersion;

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  m.def("group_datum", [](const std::string& spec) { return to_json(group_datum(parse_family_spec(spec))).dump(); });

  m.def("enumerate", [](const std::string& spec, long bound) {
    std::vector<std::string> out;
    for (const auto& t : enumerate(group_datum(parse_family_spec(spec)), bound)) out.push_back(label(t));
    return out;
  }, py::arg("spec"), py::arg("bound"));

  m.def("c_ratio", [](const std::string& spec, const std::vector<long>& mu, long l, const std::vector<int>& sigma, int lshift) {
    GroupDatum g = group_datum(parse_family_spec(spec));
    Edge e = make_edge(g, mu, l, sigma, lshift);
    if (!is_admissible(g, e.target)) throw InadmissibleTarget("inadmissible target " + to_string(e.target));
    return to_string(transition_coefficient(g, e).c_ratio);
  }, py::arg("spec"), py::arg("mu"), py::arg("l"), py::arg("sigma"), py::arg("lshift"));

  m.def("transition", [](const std::string& spec, const std::string& nu, const std::vector<long>& mu, long l,
                         const std::vector<int>& sigma, int lshift) {
    GroupDatum g = group_datum(parse_family_spec(spec));
    Edge e = make_edge(g, mu, l, sigma, lshift);
    if (!is_admissible(g, e.target)) throw InadmissibleTarget("inadmissible target " + to_string(e.target));
    return to_string(transition(g, parse_rational(nu), e));
  }, py::arg("spec"), py::arg("nu"), py::arg("mu"), py::arg("l"), py::arg("sigma"), py::arg("lshift"));

  m.def("identity_sum", [](const std::string& spec, const std::vector<long>& mu, long l, int lshift) {
    GroupDatum g = group_datum(parse_family_spec(spec));
    return to_string(identity_sum(g, make_ktype(g, mu, l), lshift));
  }, py::arg("spec"), py::arg("mu"), py::arg("l"), py::arg("lshift"));

  m.def("complementary_scan", [](const std::string& spec, long bound) {
    return to_json(complementary_scan(group_datum(parse_family_spec(spec)), bound)).dump();
  }, py::arg("spec"), py::arg("bound") = 12);

  m.def("schur_constants", [](const std::string& spec, const std::string& nu, long bound) {
    return to_json(schur_constants(group_datum(parse_family_spec(spec)), parse_rational(nu), bound)).dump();
  }, py::arg("spec"), py::arg("nu"), py::arg("bound"));

  m.def("emit_graph", [](const std::string& spec, const std::string& nu, long bound, const std::string& fmt) {
    return emit_graph(build_graph(group_datum(parse_family_spec(spec)), parse_rational(nu), bound), parse_graph_format(fmt));
  }, py::arg("spec"), py::arg("nu"), py::arg("bound"), py::arg("format") = "json");
}
