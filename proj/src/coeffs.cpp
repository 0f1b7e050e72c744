#include "ktrans/coeffs.hpp"

#include <vector>

#include "ktrans/disk_oracle.hpp"

namespace ktrans {

std::string to_string(ShiftReading s) { return s == ShiftReading::Target ? "target" : "literal"; }
std::string to_string(HalfReading h) { return h == HalfReading::Halved ? "halved" : "literal"; }
std::string to_string(WeylRep w) { return w == WeylRep::SignChange ? "sign-change" : "swap-then-sign"; }

std::string to_string(GammaStatus s) {
  switch (s) {
    case GammaStatus::Finite: return "finite";
    case GammaStatus::Vanishes: return "vanishes";
    case GammaStatus::Undefined: return "undefined";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::GammaFormula: return "GammaFormula";
    case Provenance::DiskOracle: return "DiskOracle";
    case Provenance::Both: return "Both";
  }
  return "?";
}

RatPair weyl_image(int sigma1, int sigma2, const RatPair& v, WeylRep rep) {
  if (rep == WeylRep::SwapThenSign) return {sigma1 * v.second, sigma2 * v.first};
  return {sigma1 * v.first, sigma2 * v.second};
}

namespace {

// Gamma(x + t eps) / Gamma(x2 + t eps), or a power of two.
struct GammaFactor {
  Rational num;
  Rational den;
  Rational t;
};

struct Quotient {
  std::vector<GammaFactor> gammas;
  Rational two_power;  // exponent of 2
};

// Perturbation direction of (y1, y2).
const Rational kTau1(3), kTau2(1);

Quotient c_quotient_factors(const GroupDatum& g, const RatPair& y, long l, const RatPair& y2, long l2, const COptions& opt) {
  Quotient q;
  auto half = [](const Rational& x) { return x / 2; };
  const Rational ys[2] = {y.first, y.second};
  const Rational yp[2] = {y2.first, y2.second};
  const Rational tau[2] = {kTau1, kTau2};
  if (g.kind == LatticeKind::Generic2) {
    for (int eps : {1, -1}) {
      Rational s = half(ys[0] + eps * ys[1]), sp = half(yp[0] + eps * yp[1]);
      Rational ts = half(tau[0] + eps * tau[1]);
      // Gamma(s)/Gamma(a1/2 + s) over the same at sp.
      q.gammas.push_back({s, sp, ts});
      Rational a = Rational(g.a1) / 2;
      Rational m = opt.half == HalfReading::Halved ? s : 2 * s;
      Rational mp = opt.half == HalfReading::Halved ? sp : 2 * sp;
      Rational tm = opt.half == HalfReading::Halved ? ts : 2 * ts;
      q.gammas.push_back({a + mp, a + m, tm});
    }
  } else if (g.kind != LatticeKind::ProductSU) {
    throw KindMismatch("Gamma formula covers Generic2 and ProductSU lattices only");
  }
  for (int j = 0; j < 2; ++j) {
    Rational b1 = g.kind == LatticeKind::Generic2 ? Rational(g.b1) : Rational(g.vmrt[static_cast<std::size_t>(j)].b);
    q.two_power += yp[j] - ys[j];
    q.gammas.push_back({ys[j], yp[j], tau[j]});
    for (int sg : {1, -1}) {
      Rational a = half(b1 + 1 + ys[j] + sg * l), ap = half(b1 + 1 + yp[j] + sg * l2);
      q.gammas.push_back({ap, a, half(tau[j])});
    }
  }
  return q;
}

Rational pow2(const Rational& e) {
  long k = to_long(e);
  Rational r(1);
  Rational base(k >= 0 ? 2 : 1, k >= 0 ? 1 : 2);
  for (long i = 0; i < std::labs(k); ++i) r *= base;
  return r;
}

GammaProbe probe_of(const EpsMonomial& m) {
  GammaProbe p;
  p.value = m.lead;
  p.order = m.order;
  p.status = m.order == 0 ? GammaStatus::Finite : (m.order > 0 ? GammaStatus::Vanishes : GammaStatus::Undefined);
  return p;
}

}  // namespace

EpsMonomial c_quotient_eps(const GroupDatum& g, const RatPair& y, long l, const RatPair& y2, long l2, const COptions& opt) {
  Quotient q = c_quotient_factors(g, y, l, y2, l2, opt);
  EpsMonomial m{pow2(q.two_power), 0};
  for (const auto& f : q.gammas) {
    // Gamma(num)/Gamma(den) = 1 / (Gamma(den)/Gamma(num)) and den - num is integral.
    m *= gamma_quotient_eps(f.num, f.den, f.t);
  }
  return m;
}

Rational c_quotient(const GroupDatum& g, const RatPair& y, long l, const RatPair& y2, long l2, const COptions& opt) {
  Quotient q = c_quotient_factors(g, y, l, y2, l2, opt);
  Rational r = pow2(q.two_power);
  for (const auto& f : q.gammas) r *= gamma_quotient(f.num, f.den);
  return r;
}

std::pair<RatPair, RatPair> c_arguments(const GroupDatum& g, const KType& s, int sigma1, int sigma2, const COptions& opt) {
  RatPair mr{Rational(s.mu1 + g.rho1), Rational(s.mu2 + g.rho2)};
  RatPair y = weyl_image(sigma1, sigma2, mr, opt.weyl);
  RatPair y2;
  if (opt.shift == ShiftReading::Target) {
    RatPair tr{Rational(s.mu1 + sigma1 + g.rho1), Rational(s.mu2 + sigma2 + g.rho2)};
    y2 = weyl_image(sigma1, sigma2, tr, opt.weyl);
  } else {
    y2 = {y.first + sigma1, y.second + sigma2};
  }
  return {y, y2};
}

Rational c_ratio_gamma(const GroupDatum& g, const KType& s, int sigma1, int sigma2, int lshift, const COptions& opt) {
  if (!is_admissible(g, s)) throw InadmissibleTarget("inadmissible source " + to_string(s));
  KType t = shifted(s, sigma1, sigma2, lshift);
  if (!is_admissible(g, t)) throw InadmissibleTarget("inadmissible target " + to_string(t));
  auto [y, y2] = c_arguments(g, s, sigma1, sigma2, opt);
  return c_quotient(g, y, s.l, y2, s.l + lshift, opt);
}

GammaProbe c_ratio_gamma_probe(const GroupDatum& g, const KType& s, int sigma1, int sigma2, int lshift, const COptions& opt) {
  auto [y, y2] = c_arguments(g, s, sigma1, sigma2, opt);
  return probe_of(c_quotient_eps(g, y, s.l, y2, s.l + lshift, opt));
}

namespace {

// Product of two quotients through an intermediate point.  The halves may have
// half-integral gaps on their own, so numerators and denominators are pooled
// and re-paired before evaluation.
EpsMonomial telescope(const Quotient& a, const Quotient& b) {
  struct Arg {
    Rational x, t;
    bool used = false;
  };
  std::vector<Arg> num, den;
  for (const Quotient* q : {&a, &b})
    for (const auto& f : q->gammas) {
      num.push_back({f.num, f.t});
      den.push_back({f.den, f.t});
    }
  EpsMonomial m{pow2(a.two_power + b.two_power), 0};
  for (int pass = 0; pass < 2; ++pass)
    for (auto& n : num) {
      if (n.used) continue;
      for (auto& d : den) {
        if (d.used || d.t != n.t) continue;
        Rational gap = d.x - n.x;
        if (pass == 0 ? gap != 0 : !is_integer(gap)) continue;
        if (pass == 1) m *= gamma_quotient_eps(n.x, d.x, n.t);
        n.used = d.used = true;
        break;
      }
    }
  for (const auto& n : num)
    if (!n.used) throw std::invalid_argument("telescoping path leaves an unpaired Gamma factor");
  return m;
}

}  // namespace

GammaProbe c_ratio_gamma_path(const GroupDatum& g, const KType& s, int sigma1, int sigma2, int lshift, bool mu_first, const COptions& opt) {
  auto [y, y2] = c_arguments(g, s, sigma1, sigma2, opt);
  long l = s.l, l2 = s.l + lshift;
  Quotient a = mu_first ? c_quotient_factors(g, y, l, y2, l, opt) : c_quotient_factors(g, y, l, y, l2, opt);
  Quotient b = mu_first ? c_quotient_factors(g, y2, l, y2, l2, opt) : c_quotient_factors(g, y, l2, y2, l2, opt);
  return probe_of(telescope(a, b));
}

Rational c_ratio_oracle(const GroupDatum& g, const KType& s, int sigma1, int sigma2, int lshift) {
  if (!is_admissible(g, s)) throw InadmissibleTarget("inadmissible source " + to_string(s));
  KType t = shifted(s, sigma1, sigma2, lshift);
  if (!is_admissible(g, t)) throw InadmissibleTarget("inadmissible target " + to_string(t));
  auto c = c_ratio_disk(g, s, sigma1, sigma2, lshift);
  return c ? *c : Rational(0);
}

AffineFactor affine_factor(const GroupDatum& g, const Edge& e) {
  const KType& s = e.source;
  switch (g.kind) {
    case LatticeKind::Generic2:
    case LatticeKind::ProductSU:
      return {Rational(e.sigma1 * (s.mu1 + g.rho1) + e.sigma2 * (s.mu2 + g.rho2) - (g.rho1 + g.rho2))};
    case LatticeKind::RankOne: {
      long m = s.mu1, l = s.l, d = g.spec.p1;
      if (e.sigma1 > 0 && e.lshift > 0) return {Rational(m + l)};
      if (e.sigma1 < 0 && e.lshift > 0) return {Rational(-m - 2 * d + 2 + l)};
      if (e.sigma1 > 0 && e.lshift < 0) return {Rational(m - l)};
      return {Rational(-m - l - 2 * d + 2)};
    }
    case LatticeKind::SpDoubled: {
      long m = s.mu1, r = g.spec.p1;
      if (e.sigma1 > 0) return {Rational(2 * m)};
      return {Rational(-2 * m - 2 * r + 2)};
    }
  }
  return {};
}

Rational prefactor(const GroupDatum& g) { return g.kind == LatticeKind::RankOne ? Rational(1, 4) : Rational(1, 8); }

TransitionCoefficient transition_coefficient(const GroupDatum& g, const Edge& e, const COptions& opt) {
  TransitionCoefficient t;
  t.prefactor = prefactor(g);
  t.affine = affine_factor(g, e);
  switch (g.kind) {
    case LatticeKind::Generic2:
      t.c_ratio = c_ratio_gamma(g, e.source, e.sigma1, e.sigma2, e.lshift, opt);
      t.provenance = Provenance::GammaFormula;
      break;
    case LatticeKind::ProductSU: {
      t.c_ratio = c_ratio_gamma(g, e.source, e.sigma1, e.sigma2, e.lshift, opt);
      Rational o = c_ratio_oracle(g, e.source, e.sigma1, e.sigma2, e.lshift);
      t.provenance = o == t.c_ratio ? Provenance::Both : Provenance::GammaFormula;
      break;
    }
    case LatticeKind::RankOne:
    case LatticeKind::SpDoubled:
      t.c_ratio = c_ratio_oracle(g, e.source, e.sigma1, e.sigma2, e.lshift);
      t.provenance = Provenance::DiskOracle;
      break;
  }
  return t;
}

Rational transition(const GroupDatum& g, const Rational& nu, const Edge& e) {
  return transition_coefficient(g, e).value(nu);
}

Rational identity_sum(const GroupDatum& g, const KType& s, int lshift, const COptions& opt) {
  Rational sum;
  if (g.kind == LatticeKind::SpDoubled) {
    // sp(r,R) also has l-only moves; the disk expansion lists every target.
    auto [p, q] = disk_index(g, s.mu1, s.l);
    for (const auto& [k, c] : linearize_z2_product(disk_alpha(g), p, q, lshift < 0)) sum += 4 * c;
    return sum;
  }
  for (const Edge& e : neighbors(g, s)) {
    if (e.lshift != lshift) continue;
    if (g.kind == LatticeKind::RankOne)
      sum += c_ratio_oracle(g, s, e.sigma1, e.sigma2, e.lshift);
    else
      sum += c_ratio_gamma(g, s, e.sigma1, e.sigma2, e.lshift, opt);
  }
  return sum;
}

Rational identity_sum_target(const GroupDatum& g) { return g.kind == LatticeKind::RankOne ? Rational(2) : Rational(4); }

}  // namespace ktrans
