#include "ktrans/disk_oracle.hpp"

#include <array>
#include <cstdlib>

#include "ktrans/coeffs.hpp"

namespace ktrans {

DiskPoly DiskPoly::monomial(long i, long j, const Rational& c) {
  DiskPoly p;
  p.add_term({i, j}, c);
  return p;
}

Rational DiskPoly::coeff(long i, long j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

void DiskPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

DiskPoly& DiskPoly::operator+=(const DiskPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

DiskPoly& DiskPoly::operator-=(const DiskPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

DiskPoly& DiskPoly::operator*=(const Rational& s) {
  if (s == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

DiskPoly operator*(const DiskPoly& a, const DiskPoly& b) {
  DiskPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

DiskPoly DiskPoly::conj() const {
  DiskPoly r;
  for (const auto& [k, c] : t_) r.add_term({k.second, k.first}, c);
  return r;
}

DiskPoly DiskPoly::d_z() const {
  DiskPoly r;
  for (const auto& [k, c] : t_)
    if (k.first > 0) r.add_term({k.first - 1, k.second}, c * k.first);
  return r;
}

DiskPoly DiskPoly::d_zbar() const {
  DiskPoly r;
  for (const auto& [k, c] : t_)
    if (k.second > 0) r.add_term({k.first, k.second - 1}, c * k.second);
  return r;
}

Rational DiskPoly::at_one() const {
  Rational s;
  for (const auto& [k, c] : t_) s += c;
  return s;
}

std::vector<Rational> jacobi_t(long n, long a, long b) {
  // x = 2t - 1; three-term recurrence in x carried out on coefficient vectors in t.
  auto times_x = [](const std::vector<Rational>& p) {
    std::vector<Rational> r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] -= p[i];
      r[i + 1] += 2 * p[i];
    }
    return r;
  };
  std::vector<Rational> p0{Rational(1)};
  if (n == 0) return p0;
  Rational h1(a - b, 2), h2(a + b + 2, 2);
  h1.canonicalize();
  h2.canonicalize();
  std::vector<Rational> p1{h1 - h2, 2 * h2};
  for (long k = 2; k <= n; ++k) {
    Rational c1 = 2 * k * (k + a + b) * (2 * k + a + b - 2);
    Rational c2 = (2 * k + a + b - 1) * (a * a - b * b);
    Rational c3 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2);
    Rational c4 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b);
    std::vector<Rational> xp = times_x(p1);
    std::vector<Rational> next(xp.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      Rational v = c3 * xp[i];
      if (i < p1.size()) v += c2 * p1[i];
      if (i < p0.size()) v -= c4 * p0[i];
      next[i] = v / c1;
    }
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

std::vector<Rational> jacobi_normalized_t(long n, long a, long b) {
  std::vector<Rational> p = jacobi_t(n, a, b);
  Rational at1;
  for (const auto& c : p) at1 += c;
  for (auto& c : p) c /= at1;
  return p;
}

namespace {

struct DiskKey {
  long alpha, p, q;
  bool operator<(const DiskKey& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    if (p != o.p) return p < o.p;
    return q < o.q;
  }
};

const DiskPoly& disk_cached(long alpha, long p, long q) {
  thread_local std::map<DiskKey, DiskPoly> cache;
  DiskKey key{alpha, p, q};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DiskPoly r;
  if (p < q) {
    r = disk_cached(alpha, q, p).conj();
  } else {
    std::vector<Rational> jac = jacobi_normalized_t(q, alpha, p - q);
    for (std::size_t i = 0; i < jac.size(); ++i)
      r.add_term({p - q + static_cast<long>(i), static_cast<long>(i)}, jac[i]);
  }
  return cache.emplace(key, std::move(r)).first->second;
}

bool top_less(const DiskPoly::Key& a, const DiskPoly::Key& b) {
  long sa = a.first + a.second, sb = b.first + b.second;
  if (sa != sb) return sa < sb;
  return a.first < b.first;
}

}  // namespace

DiskPoly disk_polynomial(long alpha, long p, long q) {
  if (alpha < 0 || p < 0 || q < 0) throw std::invalid_argument("disk_polynomial: negative index");
  return disk_cached(alpha, p, q);
}

Rational inner_product(long alpha, const DiskPoly& f, const DiskPoly& g) {
  Rational s;
  Integer a1 = factorial(alpha + 1);
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      if (kf.first - kf.second != kg.first - kg.second) continue;
      long t = kf.first + kg.second;
      Rational w(factorial(t) * a1, factorial(t + alpha + 1));
      w.canonicalize();
      s += cf * cg * w;
    }
  return s;
}

Expansion expand_disk(long alpha, const DiskPoly& f) {
  DiskPoly rest = f;
  Expansion out;
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (top_less(top->first, it->first)) top = it;
    auto [p, q] = top->first;
    const DiskPoly& r = disk_cached(alpha, p, q);
    Rational c = top->second / r.coeff(p, q);
    out[{p, q}] += c;
    rest -= r * c;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Expansion linearize_z_product(long alpha, long p, long q, bool conjugate) {
  DiskPoly z = conjugate ? DiskPoly::monomial(0, 1) : DiskPoly::monomial(1, 0);
  return expand_disk(alpha, z * disk_cached(alpha, p, q));
}

Expansion linearize_z2_product(long alpha, long p, long q, bool conjugate) {
  DiskPoly z = conjugate ? DiskPoly::monomial(0, 2) : DiskPoly::monomial(2, 0);
  return expand_disk(alpha, z * disk_cached(alpha, p, q));
}

std::pair<long, long> disk_index(const GroupDatum& g, long m, long l) {
  if (g.kind == LatticeKind::SpDoubled) return {m + l, m - l};
  return {(m + l) / 2, (m - l) / 2};
}

long disk_alpha(const GroupDatum& g, int factor) {
  switch (g.kind) {
    case LatticeKind::RankOne:
    case LatticeKind::SpDoubled: return g.b1;
    case LatticeKind::ProductSU: return factor == 1 ? g.vmrt[0].b : g.vmrt[1].b;
    case LatticeKind::Generic2: break;
  }
  throw KindMismatch("no disk model for Generic2 lattices");
}

std::optional<Rational> c_ratio_disk(const GroupDatum& g, const KType& s, int sigma1, int sigma2, int lshift) {
  bool conj = lshift < 0;
  auto coef = [&](long alpha, long m, int sig) -> Rational {
    auto [p, q] = disk_index(g, m, s.l);
    auto [tp, tq] = disk_index(g, m + sig, s.l + lshift);
    Expansion ex = g.kind == LatticeKind::SpDoubled ? linearize_z2_product(alpha, p, q, conj)
                                                      : linearize_z_product(alpha, p, q, conj);
    auto it = ex.find({tp, tq});
    return it == ex.end() ? Rational(0) : it->second;
  };
  Rational c;
  switch (g.kind) {
    case LatticeKind::RankOne: c = 2 * coef(disk_alpha(g), s.mu1, sigma1); break;
    case LatticeKind::SpDoubled: c = 4 * coef(disk_alpha(g), s.mu1, sigma1); break;
    case LatticeKind::ProductSU:
      c = 4 * coef(disk_alpha(g, 1), s.mu1, sigma1) * coef(disk_alpha(g, 2), s.mu2, sigma2);
      break;
    case LatticeKind::Generic2: throw KindMismatch("disk oracle does not cover Generic2 lattices");
  }
  if (c == 0) return std::nullopt;
  return c;
}

Rational ModelTerm::c() const { return slope / prefactor; }

std::optional<Rational> ModelTerm::intercept() const {
  if (slope == 0) return std::nullopt;
  return constant / slope;
}

namespace {

using Key4 = std::array<long, 4>;  // exponents of (u, ubar, w, wbar)
using Poly4 = std::map<Key4, Rational>;

void add4(Poly4& a, const Key4& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = a.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

Poly4 mul4(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add4(r, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, ca * cb);
  return r;
}

Poly4 scale4(const Poly4& a, const Rational& s) {
  Poly4 r;
  for (const auto& [k, c] : a) add4(r, k, c * s);
  return r;
}

Poly4 sum4(const Poly4& a, const Poly4& b, const Rational& s = 1) {
  Poly4 r = a;
  for (const auto& [k, c] : b) add4(r, k, c * s);
  return r;
}

Poly4 d4(const Poly4& a, int i) {
  Poly4 r;
  for (const auto& [k, c] : a)
    if (k[i] > 0) {
      Key4 kk = k;
      kk[i] -= 1;
      add4(r, kk, c * k[i]);
    }
  return r;
}

Poly4 mono4(int i) {
  Key4 k{};
  k[i] = 1;
  return {{k, Rational(1)}};
}

Poly4 product_basis(long a1, long a2, long P, long Q, long P2, long Q2) {
  Poly4 r;
  for (const auto& [k1, c1] : disk_cached(a1, P, Q).terms())
    for (const auto& [k2, c2] : disk_cached(a2, P2, Q2).terms()) add4(r, {k1.first, k1.second, k2.first, k2.second}, c1 * c2);
  return r;
}

// Expansion in R^{a1}(u) R^{a2}(w).
std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, Rational> expand_product(long a1, long a2, const Poly4& f) {
  std::map<std::pair<long, long>, DiskPoly> by_w;
  for (const auto& [k, c] : f) by_w[{k[2], k[3]}].add_term({k[0], k[1]}, c);
  std::map<std::pair<long, long>, DiskPoly> by_u;
  for (const auto& [wk, up] : by_w)
    for (const auto& [ui, c] : expand_disk(a1, up)) by_u[ui].add_term(wk, c);
  std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, Rational> out;
  for (const auto& [ui, wp] : by_u) {
    if (wp.is_zero()) continue;
    for (const auto& [wi, c] : expand_disk(a2, wp))
      if (c != 0) out[{ui, wi}] = c;
  }
  return out;
}

std::vector<ModelTerm> rank_one_action(const GroupDatum& g, const KType& s) {
  long alpha = disk_alpha(g);
  bool sp = g.kind == LatticeKind::SpDoubled;
  auto [p, q] = disk_index(g, s.mu1, s.l);
  const DiskPoly& F = disk_cached(alpha, p, q);
  DiskPoly w = sp ? DiskPoly::monomial(2, 0) : DiskPoly::monomial(1, 0);
  DiskPoly wb = w.conj();
  Rational lam = sp ? make_rational(p - q, 2) : Rational(p - q);
  lam.canonicalize();
  DiskPoly one_minus = DiskPoly::constant(1) - DiskPoly::monomial(1, 1);
  DiskPoly slope_part = (w + wb) * F * Rational(1, 2);
  DiskPoly rest = (w - wb) * F * lam;
  DiskPoly z = DiskPoly::monomial(1, 0), zb = DiskPoly::monomial(0, 1);
  if (sp) {
    rest -= z * one_minus * F.d_zbar();
    rest -= zb * one_minus * F.d_z();
  } else {
    rest -= one_minus * F.d_zbar();
    rest -= one_minus * F.d_z();
  }
  Expansion es = expand_disk(alpha, slope_part), ec = expand_disk(alpha, rest);
  std::map<std::pair<long, long>, std::pair<Rational, Rational>> merged;
  for (const auto& [k, c] : es) merged[k].first = c;
  for (const auto& [k, c] : ec) merged[k].second = c;
  std::vector<ModelTerm> out;
  Rational pref = sp ? Rational(1, 8) : Rational(1, 4);
  for (const auto& [k, sc] : merged) {
    long m2 = k.first + k.second, l2 = k.first - k.second;
    KType t = sp ? KType::rank_one(g.kind, m2 / 2, l2 / 2) : KType::rank_one(g.kind, m2, l2);
    out.push_back({t, sc.first, sc.second, pref});
  }
  return out;
}

std::vector<ModelTerm> product_action(const GroupDatum& g, const KType& s) {
  long a1 = disk_alpha(g, 1), a2 = disk_alpha(g, 2);
  long P = (s.mu1 + s.l) / 2, Q = (s.mu1 - s.l) / 2, P2 = (s.mu2 + s.l) / 2, Q2 = (s.mu2 - s.l) / 2;
  Poly4 F = product_basis(a1, a2, P, Q, P2, Q2);
  Poly4 U = mono4(0), UB = mono4(1), W = mono4(2), WB = mono4(3);
  Poly4 one{{Key4{}, Rational(1)}};
  Poly4 wu = mul4(W, U), wbub = mul4(WB, UB);
  Poly4 omw = sum4(one, mul4(W, WB), -1), omu = sum4(one, mul4(U, UB), -1);
  Poly4 slope_part = scale4(mul4(sum4(wu, wbub), F), Rational(1, 2));
  Poly4 rest = scale4(mul4(sum4(wu, wbub, -1), F), Rational(s.l));
  Poly4 deu = sum4(scale4(mul4(mul4(U, omw), d4(F, 3)), -1), scale4(mul4(mul4(W, omu), d4(F, 1)), -1));
  Poly4 due = sum4(mul4(mul4(UB, omw), d4(F, 2)), mul4(mul4(WB, omu), d4(F, 0)));
  rest = sum4(rest, sum4(deu, due, -1));
  auto es = expand_product(a1, a2, slope_part), ec = expand_product(a1, a2, rest);
  std::map<std::pair<std::pair<long, long>, std::pair<long, long>>, std::pair<Rational, Rational>> merged;
  for (const auto& [k, c] : es) merged[k].first = c;
  for (const auto& [k, c] : ec) merged[k].second = c;
  std::vector<ModelTerm> out;
  for (const auto& [k, sc] : merged) {
    auto [ui, wi] = k;
    long l1 = ui.first - ui.second, l2 = wi.first - wi.second;
    if (l1 != l2) throw std::logic_error("product model produced mismatched central characters");
    out.push_back({KType::rank_two(g.kind, ui.first + ui.second, wi.first + wi.second, l1), sc.first, sc.second, Rational(1, 8)});
  }
  return out;
}

}  // namespace

std::vector<ModelTerm> model_action(const GroupDatum& g, const KType& source) {
  if (!is_admissible(g, source)) throw std::invalid_argument("model_action: inadmissible source " + to_string(source));
  switch (g.kind) {
    case LatticeKind::RankOne:
    case LatticeKind::SpDoubled: return rank_one_action(g, source);
    case LatticeKind::ProductSU: return product_action(g, source);
    case LatticeKind::Generic2: break;
  }
  throw KindMismatch("no disk model for Generic2 lattices");
}

Theorem5Report verify_theorem_5(const GroupDatum& g, long bound) {
  if (g.kind != LatticeKind::RankOne && g.kind != LatticeKind::SpDoubled)
    throw KindMismatch("verify_theorem_5 needs a rank-one lattice");
  Theorem5Report rep;
  for (const KType& s : enumerate(g, bound)) {
    auto terms = model_action(g, s);
    std::vector<Edge> cand = neighbors(g, s);
    for (const auto& t : terms) {
      Theorem5Row row;
      row.source = s;
      row.target = t.target;
      row.model_c = t.c();
      row.model_intercept = t.intercept();
      const Edge* e = nullptr;
      for (const auto& c : cand)
        if (c.target == t.target) e = &c;
      if (!e) {
        row.listed = false;
        row.sigma = 0;
        row.lshift = static_cast<int>(t.target.l - s.l);
        row.formula_intercept = 0;
        rep.unlisted.push_back(row);
        continue;
      }
      row.sigma = e->sigma1;
      row.lshift = e->lshift;
      row.formula_intercept = affine_factor(g, *e).intercept;
      row.intercept_ok = row.model_intercept && *row.model_intercept == row.formula_intercept;
      auto cd = c_ratio_disk(g, s, e->sigma1, e->sigma2, e->lshift);
      row.c_ok = cd && *cd == row.model_c;
      ++rep.checked;
      if (!row.intercept_ok || !row.c_ok) ++rep.failures;
      rep.rows.push_back(row);
    }
    // Every admissible candidate must appear in the model expansion.
    for (const auto& c : cand) {
      bool seen = false;
      for (const auto& t : terms) seen = seen || t.target == c.target;
      if (!seen) {
        Theorem5Row row;
        row.source = s;
        row.target = c.target;
        row.sigma = c.sigma1;
        row.lshift = c.lshift;
        row.formula_intercept = affine_factor(g, c).intercept;
        ++rep.checked;
        ++rep.failures;
        rep.rows.push_back(row);
      }
    }
  }
  return rep;
}

}  // namespace ktrans
