#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktrans {

using Integer = mpz_class;
using Rational = mpq_class;

// "P/Q" for non-integers, "P" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);
Rational make_rational(long num, long den = 1);

bool is_integer(const Rational& q);
// Requires is_integer(q) and a value that fits in a long.
long to_long(const Rational& q);

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
GaussianRational operator/(GaussianRational a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
std::string to_string(const GaussianRational& z);

const GaussianRational kI{Rational(0), Rational(1)};

class PoleEncountered : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gamma(x+n)/Gamma(x) as a finite product.  Throws PoleEncountered when a
// zero factor would have to be inverted (n < 0 and x-j = 0 for some j).
Rational gamma_ratio(const Rational& x, long n);

// Gamma(x)/Gamma(y) where y-x is an integer.
Rational gamma_quotient(const Rational& x, const Rational& y);

// Leading behaviour lead * eps^order of an expression in a small parameter.
struct EpsMonomial {
  Rational lead{1};
  long order = 0;

  EpsMonomial& operator*=(const EpsMonomial& o);
  EpsMonomial inverse() const;
};

// Gamma(x + n + t*eps) / Gamma(x + t*eps) to leading order in eps.
// t must be nonzero when the chain touches a pole.
EpsMonomial gamma_ratio_eps(const Rational& x, const Rational& t, long n);
// Gamma(x + tx*eps) / Gamma(y + ty*eps) with y-x integer and tx == ty.
EpsMonomial gamma_quotient_eps(const Rational& x, const Rational& y, const Rational& t);

// Sparse Laurent polynomial in N formal torus variables e^{i x_j} with
// Gaussian rational coefficients.
template <std::size_t N>
class LaurentPoly {
 public:
  using Exponent = std::array<long, N>;
  using Terms = std::map<Exponent, GaussianRational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const GaussianRational& c) { add_term(Exponent{}, c); }
  static LaurentPoly monomial(const Exponent& e, const GaussianRational& c = GaussianRational(1)) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(const Exponent& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& s) { return a *= s; }
  friend LaurentPoly operator*(const GaussianRational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t j = 0; j < N; ++j) e[j] = ea[j] + eb[j];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Complex conjugate on the real torus: e^{imx} -> e^{-imx}, coefficients conjugated.
  LaurentPoly conj() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
      Exponent f;
      for (std::size_t j = 0; j < N; ++j) f[j] = -e[j];
      r.add_term(f, c.conj());
    }
    return r;
  }

  // Substitute x_j -> 0 (every variable equal to 1).
  GaussianRational at_identity() const {
    GaussianRational s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

 private:
  Terms terms_;
};

using Laurent1 = LaurentPoly<1>;
using Laurent2 = LaurentPoly<2>;

// Dominance order: one variable by exponent, two variables lexicographic on
// (m1+m2, m1).
bool dominance_less(const std::array<long, 1>& a, const std::array<long, 1>& b);
bool dominance_less(const std::array<long, 2>& a, const std::array<long, 2>& b);

template <std::size_t N>
std::pair<std::array<long, N>, GaussianRational> leading_term(const LaurentPoly<N>& p) {
  if (p.is_zero()) throw ZeroPolynomial("leading_term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (dominance_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

// cos(x_j), sin(x_j) as Laurent polynomials in variable j.
template <std::size_t N>
LaurentPoly<N> cos_poly(std::size_t j = 0) {
  std::array<long, N> up{}, dn{};
  up[j] = 1;
  dn[j] = -1;
  LaurentPoly<N> p;
  p.add_term(up, Rational(1, 2));
  p.add_term(dn, Rational(1, 2));
  return p;
}
template <std::size_t N>
LaurentPoly<N> sin_poly(std::size_t j = 0) {
  std::array<long, N> up{}, dn{};
  up[j] = 1;
  dn[j] = -1;
  LaurentPoly<N> p;
  p.add_term(up, GaussianRational(Rational(0), Rational(-1, 2)));
  p.add_term(dn, GaussianRational(Rational(0), Rational(1, 2)));
  return p;
}
// cosh, sinh in a formal variable t = e^{x}; stored with the same exponent map.
template <std::size_t N>
LaurentPoly<N> cosh_poly(std::size_t j = 0) {
  return cos_poly<N>(j);
}
template <std::size_t N>
LaurentPoly<N> sinh_poly(std::size_t j = 0) {
  std::array<long, N> up{}, dn{};
  up[j] = 1;
  dn[j] = -1;
  LaurentPoly<N> p;
  p.add_term(up, Rational(1, 2));
  p.add_term(dn, Rational(-1, 2));
  return p;
}

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace ktrans
