#include "ktrans/scalars.hpp"

#include <cctype>

namespace ktrans {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto slash = t.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational: " + text);
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("malformed rational: " + text);
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + to_string(q));
  return q.get_num().get_si();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm2();
  if (n == 0) throw std::domain_error("division by zero Gaussian rational");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}
GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = z.re == 0 ? "" : to_string(z.re) + (z.im > 0 ? "+" : "");
  return s + to_string(z.im) + "i";
}

Rational gamma_ratio(const Rational& x, long n) {
  Rational r(1);
  if (n >= 0) {
    for (long j = 0; j < n; ++j) r *= x + j;
    return r;
  }
  for (long j = 1; j <= -n; ++j) {
    Rational f = x - j;
    if (f == 0) throw PoleEncountered("gamma_ratio: pole at " + to_string(x) + " shifted by " + std::to_string(n));
    r /= f;
  }
  return r;
}

Rational gamma_quotient(const Rational& x, const Rational& y) {
  Rational d = y - x;
  if (!is_integer(d)) throw std::invalid_argument("gamma_quotient: non-integral shift");
  Rational v = gamma_ratio(x, to_long(d));
  if (v == 0) throw PoleEncountered("gamma_quotient: Gamma(" + to_string(y) + ") in the denominator is infinite");
  return 1 / v;
}

EpsMonomial& EpsMonomial::operator*=(const EpsMonomial& o) {
  lead *= o.lead;
  order += o.order;
  return *this;
}

EpsMonomial EpsMonomial::inverse() const {
  if (lead == 0) throw std::domain_error("EpsMonomial: zero lead");
  return EpsMonomial{1 / lead, -order};
}

EpsMonomial gamma_ratio_eps(const Rational& x, const Rational& t, long n) {
  EpsMonomial m;
  auto factor = [&](const Rational& f) {
    if (f == 0) {
      if (t == 0) throw PoleEncountered("gamma_ratio_eps: zero factor without a perturbation direction");
      return EpsMonomial{t, 1};
    }
    return EpsMonomial{f, 0};
  };
  if (n >= 0) {
    for (long j = 0; j < n; ++j) m *= factor(x + j);
    return m;
  }
  for (long j = 1; j <= -n; ++j) m *= factor(x - j).inverse();
  return m;
}

EpsMonomial gamma_quotient_eps(const Rational& x, const Rational& y, const Rational& t) {
  Rational d = y - x;
  if (!is_integer(d)) throw std::invalid_argument("gamma_quotient_eps: non-integral shift");
  return gamma_ratio_eps(x, t, to_long(d)).inverse();
}

bool dominance_less(const std::array<long, 1>& a, const std::array<long, 1>& b) { return a[0] < b[0]; }

bool dominance_less(const std::array<long, 2>& a, const std::array<long, 2>& b) {
  long sa = a[0] + a[1], sb = b[0] + b[1];
  if (sa != sb) return sa < sb;
  return a[0] < b[0];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace ktrans
