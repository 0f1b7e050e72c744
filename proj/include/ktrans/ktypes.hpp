#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktrans/catalog.hpp"

namespace ktrans {

class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rank-two lattices use (mu1, mu2, l).  RankOne and SpDoubled use (m, l)
// stored as mu1 = m, mu2 = 0; SpDoubled (m, l) stands for the weight (2m, 2l).
struct KType {
  LatticeKind kind = LatticeKind::Generic2;
  long mu1 = 0;
  long mu2 = 0;
  long l = 0;

  static KType rank_two(LatticeKind k, long mu1, long mu2, long l) { return {k, mu1, mu2, l}; }
  static KType rank_one(LatticeKind k, long m, long l) { return {k, m, 0, l}; }

  bool is_rank_two() const { return kind == LatticeKind::Generic2 || kind == LatticeKind::ProductSU; }
  long m() const { return mu1; }

  auto operator<=>(const KType& o) const {
    if (auto c = mu1 <=> o.mu1; c != 0) return c;
    if (auto c = mu2 <=> o.mu2; c != 0) return c;
    if (auto c = l <=> o.l; c != 0) return c;
    return static_cast<int>(kind) <=> static_cast<int>(o.kind);
  }
  bool operator==(const KType& o) const = default;
};

std::string to_string(const KType& t);
// Label used in graph output: "(mu1,mu2;l)" or "(m;l)".
std::string label(const KType& t);

struct Edge {
  KType source;
  KType target;
  int sigma1 = 1;  // rank-one: the sign of the m-shift
  int sigma2 = 1;  // unused for rank-one kinds
  int lshift = 1;

  Edge reversed() const { return {target, source, -sigma1, is_rank_two() ? -sigma2 : sigma2, -lshift}; }
  bool is_rank_two() const { return source.is_rank_two(); }
  bool operator==(const Edge& o) const = default;
};

std::string sigma_string(const Edge& e);
std::string to_string(const Edge& e);

KType spherical(const GroupDatum& g);
bool is_admissible(const GroupDatum& g, const KType& t);
// Candidate target of a shift, regardless of admissibility.
KType shifted(const KType& s, int sigma1, int sigma2, int lshift);
std::vector<Edge> neighbors(const GroupDatum& g, const KType& s);
// Admissible K-types with max(mu1, mu2, |l|) <= bound, in lexicographic order.
std::vector<KType> enumerate(const GroupDatum& g, long bound);
long index_size(const KType& t);

}  // namespace ktrans
