#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ktrans/analysis.hpp"
#include "ktrans/catalog.hpp"
#include "ktrans/coeffs.hpp"
#include "ktrans/disk_oracle.hpp"
#include "ktrans/jordan_model.hpp"
#include "ktrans/ktypes.hpp"
#include "ktrans/su2_oracle.hpp"

namespace ktrans {

using Json = nlohmann::ordered_json;

extern const char* const kToolVersion;

enum class Verdict { Pass, Fail, ReportedDiscrepancy };
std::string to_string(Verdict v);

struct Report {
  std::string command;
  std::string group;
  Json results = Json::object();
  std::vector<std::pair<std::string, Verdict>> verdicts;

  void verdict(const std::string& name, Verdict v) { verdicts.emplace_back(name, v); }
  void verdict(const std::string& name, bool pass) { verdict(name, pass ? Verdict::Pass : Verdict::Fail); }
  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }
  Json to_json() const;
};

Json rational_json(const Rational& q);
Json optional_json(const std::optional<Rational>& q);
Json to_json(const GroupDatum& g);
Json to_json(const KType& t);
Json to_json(const Edge& e);
Json to_json(const TransitionCoefficient& c);
Json to_json(const CheckReport& r);
Json to_json(const DualityReport& r);
Json to_json(const Reducibility& r);
Json to_json(const ComplementaryScan& s);
Json to_json(const SchurTable& t);
Json to_json(const SubrepReport& r);
Json to_json(const std::vector<Component>& comps);
Json to_json(const LemmaA1Report& r);
Json to_json(const Theorem5Report& r);
Json to_json(const Laurent1& p);

enum class GraphFormat { Dot, Json, Csv };
GraphFormat parse_graph_format(const std::string& s);
std::string emit_graph(const KTypeGraph& g, GraphFormat f);

}  // namespace ktrans
