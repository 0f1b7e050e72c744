#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktrans/coeffs.hpp"
#include "ktrans/ktypes.hpp"

namespace ktrans {

class UnstableBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every report built from the graph carries this working assumption.
extern const char* const kMultiplicityNote;

struct GraphEdge {
  Edge edge;
  TransitionCoefficient coeff;
  Rational weight;
};

struct KTypeGraph {
  GroupDatum group;
  Rational nu;
  long bound = 0;
  std::vector<KType> nodes;
  std::vector<GraphEdge> edges;  // grouped by source in node order
  std::map<KType, std::size_t> index;

  bool interior(const KType& t) const { return index_size(t) <= bound - 1; }
  const GraphEdge* find(const KType& s, const KType& t) const;
};

KTypeGraph build_graph(const GroupDatum& g, const Rational& nu, long bound);

struct Reducibility {
  bool reducible = false;
  bool theorem_branch = false;  // false: zero-locus candidate for rank-one kinds
  std::string citation;
  std::optional<Edge> witness;
  bool witness_listed = true;
};
Reducibility reducibility_predicate(const GroupDatum& g, const Rational& nu);
// All nu in [lo, hi] at which some edge with source index <= bound vanishes.
std::vector<Rational> edge_zero_locus(const GroupDatum& g, long bound, const Rational& lo, const Rational& hi);

bool intertwining_equivalent(const GroupDatum& g, const Rational& nu, const Rational& nu2);

struct ComplementaryScan {
  std::optional<Rational> computed_delta;  // nullopt: empty
  std::optional<Rational> table_delta;
  bool agrees = false;
  std::optional<Edge> binding_edge;
  long bound = 0;
  long edges_scanned = 0;
  // sp(r,R) only: the same scan including the l-only moves of the disk model.
  std::optional<std::optional<Rational>> with_l_only_moves;
};
// Scans at bound and bound+2; throws UnstableBound if they differ.
ComplementaryScan complementary_scan(const GroupDatum& g, long bound);
ComplementaryScan complementary_scan_once(const GroupDatum& g, long bound);

struct SchurTable {
  std::map<KType, Rational> constants;
  bool consistent = true;
  bool partial = false;
  bool all_positive = true;
  std::vector<Edge> cut_edges;
  std::vector<Edge> inconsistent_edges;
  std::vector<KType> unreached;
  long checked_cycles = 0;
};
SchurTable schur_constants(const GroupDatum& g, const Rational& nu, long bound);

enum class SubrepReading { MuDifference, LiteralNu };
std::string to_string(SubrepReading r);

struct SubrepSet {
  std::string name;  // "S+" or "S-"
  std::string predicate;
  long size = 0;
  bool closed = false;
  std::vector<Edge> leaks;  // nonzero edges leaving the set from interior sources
};

struct SubrepReadingResult {
  SubrepReading reading;
  SubrepSet plus, minus;
  // Both sets closed and neither empty on the truncation.
  bool closed() const { return plus.closed && minus.closed && plus.size > 0 && minus.size > 0; }
};

struct SubrepReport {
  Rational nu;
  long bound = 0;
  std::vector<SubrepReadingResult> readings;
  std::vector<SubrepReading> closed_readings;
};
SubrepReport unitarizable_subreps(const GroupDatum& g, const Rational& nu, long bound);

struct Component {
  std::vector<KType> nodes;
  bool touches_boundary = false;
};
std::vector<Component> composition_candidates(const GroupDatum& g, const Rational& nu, long bound);

}  // namespace ktrans
