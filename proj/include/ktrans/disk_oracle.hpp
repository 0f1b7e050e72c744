#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ktrans/ktypes.hpp"
#include "ktrans/scalars.hpp"

namespace ktrans {

// Polynomial in z, zbar with rational coefficients: (i, j) -> coeff of z^i zbar^j.
class DiskPoly {
 public:
  using Key = std::pair<long, long>;
  using Terms = std::map<Key, Rational>;

  DiskPoly() = default;
  static DiskPoly monomial(long i, long j, const Rational& c = Rational(1));
  static DiskPoly constant(const Rational& c) { return monomial(0, 0, c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(long i, long j) const;
  void add_term(const Key& k, const Rational& c);

  DiskPoly& operator+=(const DiskPoly& o);
  DiskPoly& operator-=(const DiskPoly& o);
  DiskPoly& operator*=(const Rational& s);
  friend DiskPoly operator+(DiskPoly a, const DiskPoly& b) { return a += b; }
  friend DiskPoly operator-(DiskPoly a, const DiskPoly& b) { return a -= b; }
  friend DiskPoly operator*(DiskPoly a, const Rational& s) { return a *= s; }
  friend DiskPoly operator*(const DiskPoly& a, const DiskPoly& b);
  bool operator==(const DiskPoly& o) const { return t_ == o.t_; }

  DiskPoly conj() const;
  DiskPoly d_z() const;
  DiskPoly d_zbar() const;
  Rational at_one() const;

 private:
  Terms t_;
};

// Normalized Jacobi P_n^{(a,b)}(2t-1)/P_n^{(a,b)}(1) as coefficients in t.
std::vector<Rational> jacobi_normalized_t(long n, long a, long b);
// Jacobi P_n^{(a,b)}(2t-1) (standard normalization) as coefficients in t.
std::vector<Rational> jacobi_t(long n, long a, long b);

DiskPoly disk_polynomial(long alpha, long p, long q);
Rational inner_product(long alpha, const DiskPoly& f, const DiskPoly& g);

using Expansion = std::map<std::pair<long, long>, Rational>;
// Expansion of an arbitrary polynomial in the basis R^alpha_{p,q}.
Expansion expand_disk(long alpha, const DiskPoly& f);
// z * R_{p,q} (or zbar * R_{p,q} if conjugate) in the R basis.
Expansion linearize_z_product(long alpha, long p, long q, bool conjugate = false);
// z^2 * R_{p,q} (or zbar^2) in the R basis.
Expansion linearize_z2_product(long alpha, long p, long q, bool conjugate = false);

// Rank-one dictionaries: su(d,1) (m,l) <-> (p,q) = ((m+l)/2, (m-l)/2);
// sp(r,R) (m,l) <-> (p,q) = (m+l, m-l).
std::pair<long, long> disk_index(const GroupDatum& g, long m, long l);
long disk_alpha(const GroupDatum& g, int factor = 1);

// Linearization-based c-ratio for ProductSU, RankOne and SpDoubled edges.
// nullopt when the target is absent from the expansion.
std::optional<Rational> c_ratio_disk(const GroupDatum& g, const KType& source, int sigma1, int sigma2, int lshift);

// Reconstructed affine-in-nu coefficient of a target in pi_nu(xi) phi.
struct ModelTerm {
  KType target;
  Rational slope;
  Rational constant;
  Rational c() const;                       // c in A = pref * (nu + intercept) * c
  std::optional<Rational> intercept() const;  // constant / slope
  Rational prefactor;
};

// Exact expansion of the Lie-algebra action in the torus-restricted disk model.
// Available for RankOne, SpDoubled and ProductSU.
std::vector<ModelTerm> model_action(const GroupDatum& g, const KType& source);

struct Theorem5Row {
  KType source;
  KType target;
  int sigma = 0;
  int lshift = 0;
  Rational model_c;
  std::optional<Rational> model_intercept;
  Rational formula_intercept;
  bool listed = true;  // target among the four displayed candidates
  bool intercept_ok = false;
  bool c_ok = false;
};

struct Theorem5Report {
  std::vector<Theorem5Row> rows;
  std::vector<Theorem5Row> unlisted;  // nonzero terms outside the candidate graph
  long checked = 0;
  long failures = 0;
  bool pass() const { return failures == 0; }
};

Theorem5Report verify_theorem_5(const GroupDatum& g, long bound);

}  // namespace ktrans
