#include "ktrans/su2_oracle.hpp"

#include <cstdlib>

namespace ktrans {

std::string to_string(TorusForm f) { return f == TorusForm::Rotation ? "rotation" : "hyperbolic"; }

namespace {

RatMatrix zeros(long n) { return RatMatrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))); }

Laurent1 cos_l() { return cos_poly<1>(); }
Laurent1 sin_l() { return sin_poly<1>(); }
Laurent1 ch_l() { return cosh_poly<1>(); }
Laurent1 sh_l() { return sinh_poly<1>(); }

// Images of e1 and e2 as (coefficient of e1, coefficient of e2).
std::pair<std::pair<Laurent1, Laurent1>, std::pair<Laurent1, Laurent1>> basis_images(TorusForm form) {
  if (form == TorusForm::Rotation) return {{cos_l(), sin_l() * GaussianRational(-1)}, {sin_l(), cos_l()}};
  return {{ch_l(), sh_l()}, {sh_l(), ch_l()}};
}

}  // namespace

SymPower::SymPower(long m_) : m(m_), H(zeros(m_ + 1)), Eplus(zeros(m_ + 1)), Eminus(zeros(m_ + 1)) {
  if (m < 0) throw IllegalParameters("symmetric power degree must be >= 0");
  for (long k = 0; k <= m; ++k) {
    auto K = static_cast<std::size_t>(k);
    H[K][K] = 2 * k - m;
    if (k < m) Eplus[K + 1][K] = m - k;
    if (k > 0) Eminus[K - 1][K] = k;
  }
}

std::vector<std::vector<Laurent1>> SymPower::group_element(TorusForm form) const {
  auto [ge1, ge2] = basis_images(form);
  auto n = static_cast<std::size_t>(m + 1);
  std::vector<std::vector<Laurent1>> G(n, std::vector<Laurent1>(n));
  for (long k = 0; k <= m; ++k) {
    // (g e1)^k (g e2)^{m-k} as a polynomial in the power of e1.
    std::vector<Laurent1> poly{Laurent1(GaussianRational(1))};
    auto times = [&](const std::pair<Laurent1, Laurent1>& v) {
      std::vector<Laurent1> next(poly.size() + 1);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j] * v.first;
        next[j] += poly[j] * v.second;
      }
      poly = std::move(next);
    };
    for (long i = 0; i < k; ++i) times(ge1);
    for (long i = k; i < m; ++i) times(ge2);
    for (std::size_t j = 0; j < n; ++j) G[j][static_cast<std::size_t>(k)] = poly[j];
  }
  return G;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r = zeros(static_cast<long>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] -= b[i][j];
  return r;
}

bool sl2_relations_hold(const SymPower& s) {
  auto br = [](const RatMatrix& x, const RatMatrix& y) { return mat_sub(mat_mul(x, y), mat_mul(y, x)); };
  RatMatrix twoEp = s.Eplus, m2Em = s.Eminus;
  for (auto& row : twoEp)
    for (auto& x : row) x *= 2;
  for (auto& row : m2Em)
    for (auto& x : row) x *= -2;
  return br(s.H, s.Eplus) == twoEp && br(s.H, s.Eminus) == m2Em && br(s.Eplus, s.Eminus) == s.H;
}

bool casimir_holds(const SymPower& s) {
  RatMatrix c = mat_mul(s.Eplus, s.Eminus);
  RatMatrix d = mat_mul(s.Eminus, s.Eplus);
  RatMatrix h2 = mat_mul(s.H, s.H);
  Rational want(s.m * (s.m + 2), 2);
  want.canonicalize();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rational v = c[i][j] + d[i][j] + h2[i][j] / 2;
      if (v != (i == j ? want : Rational(0))) return false;
    }
  return true;
}

void check_sl2_params(long m, long l) {
  if (m < 0 || std::labs(l) > m || (m - l) % 2 != 0)
    throw IllegalParameters("need |l| <= m and m = l mod 2, got (" + std::to_string(m) + "," + std::to_string(l) + ")");
}

namespace {

bool legal(long m, long l) { return m >= 0 && std::labs(l) <= m && (m - l) % 2 == 0; }

GaussianRational psi_scale(long m, long k) {
  Rational r(Integer(1) << static_cast<mp_bitcnt_t>(m), binomial(m, k));
  r.canonicalize();
  return r;
}

Laurent1 entry(long m, std::size_t row, std::size_t col, TorusForm form) {
  thread_local std::map<std::pair<long, int>, std::vector<std::vector<Laurent1>>> cache;
  auto key = std::make_pair(m, static_cast<int>(form));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, SymPower(m).group_element(form)).first;
  return it->second[row][col];
}

Laurent1 phi_or_zero(long m, long l, TorusForm form) { return legal(m, l) ? phi(m, l, form) : Laurent1(); }
Laurent1 psi_or_zero(long m, long l, TorusForm form) { return legal(m, l) ? psi(m, l, form) : Laurent1(); }

Rational leading_at(const Laurent1& p, long e) { return p.coeff({e}).re; }

// Writes f = A psi_{m+1,l2} + B psi_{m-1,l2}; returns whether that is exact.
bool decompose(const Laurent1& f, long m, long l2, TorusForm form, Rational& A, Rational& B) {
  A = leading_at(f, m + 1);
  Laurent1 rest = f - psi_or_zero(m + 1, l2, form) * GaussianRational(A);
  B = legal(m - 1, l2) ? leading_at(rest, m - 1) : Rational(0);
  rest -= psi_or_zero(m - 1, l2, form) * GaussianRational(B);
  return rest.is_zero();
}

}  // namespace

Laurent1 phi(long m, long l, TorusForm form) {
  check_sl2_params(m, l);
  auto k = static_cast<std::size_t>((m - l) / 2);
  return entry(m, k, k, form);
}

Laurent1 psi(long m, long l, TorusForm form) {
  check_sl2_params(m, l);
  return phi(m, l, form) * psi_scale(m, (m - l) / 2);
}

Laurent1 e_plus_phi(long m, long l, TorusForm form) {
  check_sl2_params(m, l);
  long k = (m - l) / 2;
  if (k == m) return {};
  return entry(m, static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1), form) * GaussianRational(m - k);
}

Laurent1 e_minus_phi(long m, long l, TorusForm form) {
  check_sl2_params(m, l);
  long k = (m - l) / 2;
  if (k == 0) return {};
  return entry(m, static_cast<std::size_t>(k), static_cast<std::size_t>(k - 1), form) * GaussianRational(k);
}

Laurent1 coefficient_12(TorusForm form) { return basis_images(form).first.second; }
Laurent1 coefficient_21(TorusForm form) { return basis_images(form).second.first; }

LemmaA1Report verify_lemma_A1(long m, long l, TorusForm form) {
  check_sl2_params(m, l);
  LemmaA1Report rep;
  rep.m = m;
  rep.l = l;
  rep.form = form;
  long k = (m - l) / 2;
  GaussianRational sf = psi_scale(m, k);
  auto q = [](long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return GaussianRational(r);
  };

  Laurent1 lhs_p = coefficient_12(form) * e_minus_phi(m, l, form);
  Laurent1 lhs_m = coefficient_21(form) * e_plus_phi(m, l, form);

  Laurent1 rhs = (phi_or_zero(m + 1, l + 1, form) - phi_or_zero(m - 1, l + 1, form)) * q((m - l) * (m + l + 2), 4 * (m + 1));
  rep.e_plus_phi = lhs_p == rhs;
  rhs = (phi_or_zero(m + 1, l - 1, form) - phi_or_zero(m - 1, l - 1, form)) * q((m + l) * (m - l + 2), 4 * (m + 1));
  rep.e_minus_phi = lhs_m == rhs;

  Laurent1 pl = lhs_p * sf, mn = lhs_m * sf;
  // Second-term coefficient with its 1/(m(m+1)); the term is absent at m = 0.
  auto second = [&](long num) { return m > 0 ? q(num, 4 * m * (m + 1)) : GaussianRational(0); };
  auto sq = [](long x) { return x * x; };

  rhs = psi_or_zero(m + 1, l + 1, form) * q(m - l, 4) - psi_or_zero(m - 1, l + 1, form) * second((m + l + 2) * sq(m - l));
  rep.e_plus_psi_expl = pl == rhs;
  rhs = psi_or_zero(m + 1, l - 1, form) * q(m + l, 4) - psi_or_zero(m - 1, l - 1, form) * second((m - l + 2) * (m + l));
  rep.e_minus_psi_expl = mn == rhs;
  rhs = psi_or_zero(m + 1, l + 1, form) * q(m - l, 4) - psi_or_zero(m - 1, l + 1, form) * second((m + l + 2) * sq(m + l));
  rep.remark_e_plus_psi = pl == rhs;
  rhs = psi_or_zero(m + 1, l - 1, form) * q(m + l, 4) - psi_or_zero(m + 1, l - 1, form) * second((m + 2 - l) * sq(m + l));
  rep.remark_e_minus_psi = mn == rhs;

  rep.plus_decomposes = decompose(pl, m, l + 1, form, rep.a_plus, rep.b_plus);
  rep.minus_decomposes = decompose(mn, m, l - 1, form, rep.a_minus, rep.b_minus);
  return rep;
}

Rational product_leading(long m1, long m2, long l) {
  check_sl2_params(m1, l);
  check_sl2_params(m2, l);
  auto lift = [](const Laurent1& p, std::size_t var) {
    Laurent2 r;
    for (const auto& [e, c] : p.terms()) {
      std::array<long, 2> ex{};
      ex[var] = e[0];
      r.add_term(ex, c);
    }
    return r;
  };
  auto minus_sin_e_minus_psi = [&](long m) {
    return coefficient_12(TorusForm::Rotation) * e_minus_phi(m, l, TorusForm::Rotation) * psi_scale(m, (m - l) / 2);
  };
  Laurent2 t1 = lift(minus_sin_e_minus_psi(m1), 0) * lift(cos_l() * psi(m2, l), 1);
  Laurent2 t2 = lift(minus_sin_e_minus_psi(m2), 1) * lift(cos_l() * psi(m1, l), 0);
  return (t1 + t2).coeff({m1 + 1, m2 + 1}).re;
}

}  // namespace ktrans
