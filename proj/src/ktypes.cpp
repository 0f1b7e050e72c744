#include "ktrans/ktypes.hpp"

#include <algorithm>
#include <cstdlib>

namespace ktrans {

namespace {

bool same_parity(long a, long b) { return ((a - b) % 2 + 2) % 2 == 0; }

}  // namespace

std::string to_string(const KType& t) {
  if (t.is_rank_two())
    return "(" + std::to_string(t.mu1) + "," + std::to_string(t.mu2) + "," + std::to_string(t.l) + ")";
  return "(" + std::to_string(t.mu1) + "," + std::to_string(t.l) + ")";
}

std::string label(const KType& t) {
  if (t.is_rank_two())
    return "(" + std::to_string(t.mu1) + "," + std::to_string(t.mu2) + ";" + std::to_string(t.l) + ")";
  return "(" + std::to_string(t.mu1) + ";" + std::to_string(t.l) + ")";
}

std::string sigma_string(const Edge& e) {
  // sigma1 = 0 marks an l-only move of the sp(r,R) disk model.
  std::string s = e.sigma1 > 0 ? "+" : (e.sigma1 < 0 ? "-" : "0");
  if (e.is_rank_two()) s += e.sigma2 > 0 ? "+" : "-";
  return s;
}

std::string to_string(const Edge& e) {
  return to_string(e.source) + "->" + to_string(e.target) + " [" + sigma_string(e) + "," + (e.lshift > 0 ? "+1" : "-1") + "]";
}

KType spherical(const GroupDatum& g) { return KType{g.kind, 0, 0, 0}; }

bool is_admissible(const GroupDatum& g, const KType& t) {
  if (t.kind != g.kind)
    throw KindMismatch("K-type of kind " + to_string(t.kind) + " used with a " + to_string(g.kind) + " group");
  long al = std::labs(t.l);
  switch (t.kind) {
    case LatticeKind::Generic2:
      return t.mu1 >= t.mu2 && t.mu2 >= al && same_parity(t.mu1, t.l) && same_parity(t.mu2, t.l);
    case LatticeKind::ProductSU:
      return t.mu1 >= al && t.mu2 >= al && same_parity(t.mu1, t.l) && same_parity(t.mu2, t.l);
    case LatticeKind::RankOne:
      return t.mu2 == 0 && t.mu1 >= al && same_parity(t.mu1, t.l);
    case LatticeKind::SpDoubled:
      return t.mu2 == 0 && t.mu1 >= al;
  }
  return false;
}

KType shifted(const KType& s, int sigma1, int sigma2, int lshift) {
  KType t = s;
  t.mu1 += sigma1;
  if (s.is_rank_two()) t.mu2 += sigma2;
  t.l += lshift;
  return t;
}

std::vector<Edge> neighbors(const GroupDatum& g, const KType& s) {
  std::vector<Edge> out;
  const int signs[2] = {-1, 1};
  if (s.is_rank_two()) {
    for (int s1 : signs)
      for (int s2 : signs)
        for (int ls : signs) {
          KType t = shifted(s, s1, s2, ls);
          if (is_admissible(g, t)) out.push_back({s, t, s1, s2, ls});
        }
  } else {
    for (int s1 : signs)
      for (int ls : signs) {
        KType t = shifted(s, s1, 0, ls);
        if (is_admissible(g, t)) out.push_back({s, t, s1, 1, ls});
      }
  }
  return out;
}

std::vector<KType> enumerate(const GroupDatum& g, long bound) {
  std::vector<KType> out;
  if (bound < 0) return out;
  bool two = g.kind == LatticeKind::Generic2 || g.kind == LatticeKind::ProductSU;
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= (two ? bound : 0); ++b)
      for (long l = -bound; l <= bound; ++l) {
        KType t{g.kind, a, b, l};
        if (is_admissible(g, t)) out.push_back(t);
      }
  return out;
}

long index_size(const KType& t) { return std::max({t.mu1, t.mu2, std::labs(t.l)}); }

}  // namespace ktrans
