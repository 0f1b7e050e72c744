#include "ktrans/jordan_model.hpp"

#include <sstream>

namespace ktrans {

TripleElement TripleElement::unit(long p, long q, long i, long j) {
  TripleElement u(p, q);
  u.at(i, j) = GaussianRational(1);
  return u;
}

bool TripleElement::is_zero() const {
  for (const auto& x : m_)
    if (!x.is_zero()) return false;
  return true;
}

TripleElement TripleElement::adjoint() const {
  TripleElement r(q_, p_);
  for (long i = 0; i < p_; ++i)
    for (long j = 0; j < q_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

TripleElement TripleElement::operator*(const TripleElement& o) const {
  if (q_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  TripleElement r(p_, o.q_);
  for (long i = 0; i < p_; ++i)
    for (long k = 0; k < q_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.q_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

TripleElement& TripleElement::operator+=(const TripleElement& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

TripleElement& TripleElement::operator-=(const TripleElement& o) {
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

TripleElement TripleElement::scaled(const GaussianRational& s) const {
  TripleElement r(*this);
  for (auto& x : r.m_) x *= s;
  return r;
}

std::string to_string(const TripleElement& u) {
  std::ostringstream out;
  out << "[";
  for (long i = 0; i < u.rows(); ++i) {
    out << (i ? "; " : "");
    for (long j = 0; j < u.cols(); ++j) out << (j ? ", " : "") << to_string(u.at(i, j));
  }
  out << "]";
  return out.str();
}

GaussianRational inner(const TripleElement& u, const TripleElement& v) {
  GaussianRational s;
  for (std::size_t i = 0; i < u.flat().size(); ++i) s += u.flat()[i] * v.flat()[i].conj();
  return s;
}

TripleElement triple(const TripleElement& u, const TripleElement& v, const TripleElement& z) {
  TripleElement vs = v.adjoint();
  return u * vs * z + z * vs * u;
}

LinOp LinOp::identity(std::size_t n) {
  LinOp r(n);
  for (std::size_t i = 0; i < n; ++i) r.at(i, i) = GaussianRational(1);
  return r;
}

LinOp LinOp::operator*(const LinOp& o) const {
  LinOp r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

LinOp LinOp::operator+(const LinOp& o) const {
  LinOp r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
  LinOp r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

LinOp LinOp::scaled(const GaussianRational& s) const {
  LinOp r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

bool LinOp::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

TripleElement LinOp::apply(const TripleElement& u) const {
  TripleElement r(u);
  for (std::size_t i = 0; i < n_; ++i) {
    GaussianRational s;
    for (std::size_t j = 0; j < n_; ++j) s += at(i, j) * u.flat()[j];
    r.flat()[i] = s;
  }
  return r;
}

LinOp commutator(const LinOp& x, const LinOp& y) { return x * y - y * x; }

JordanModel::JordanModel(long p, long q)
    : p_(p),
      q_(q),
      e_(TripleElement::unit(p, q, 0, 0)),
      v1_(TripleElement::unit(p, q, 0, 1)),
      w_(TripleElement::unit(p, q, 1, 1)),
      v2_(TripleElement::unit(p, q, 1, 0)) {
  if (p < 2 || q < 2) throw std::invalid_argument("Jordan model needs p, q >= 2");
}

TripleElement JordanModel::basis(std::size_t k) const {
  return TripleElement::unit(p_, q_, static_cast<long>(k) / q_, static_cast<long>(k) % q_);
}

LinOp JordanModel::op_D(const TripleElement& u, const TripleElement& v) const {
  std::size_t n = static_cast<std::size_t>(p_ * q_);
  LinOp r(n);
  for (std::size_t k = 0; k < n; ++k) {
    TripleElement img = triple(u, v, basis(k));
    for (std::size_t i = 0; i < n; ++i) r.at(i, k) = img.flat()[i];
  }
  return r;
}

LinOp JordanModel::peirce(int j) const {
  LinOp d = op_D(e_, e_);
  LinOp id = LinOp::identity(d.dim());
  switch (j) {
    case 2: return (d * (d - id)).scaled(Rational(1, 2));
    case 1: return (d * (d - id.scaled(2))).scaled(-1);
    case 0: return ((d - id) * (d - id.scaled(2))).scaled(Rational(1, 2));
  }
  throw std::invalid_argument("Peirce index must be 0, 1 or 2");
}

namespace {

bool is_minimal_tripotent(const TripleElement& u) { return triple(u, u, u) == u.scaled(2); }

}  // namespace

CheckReport verify_quadrangle(const JordanModel& m, bool swapped) {
  CheckReport rep;
  std::vector<TripleElement> u = {m.e(), swapped ? m.v2() : m.v1(), m.w(), swapped ? m.v1() : m.v2()};
  std::vector<std::string> nm = {"e", swapped ? "v2" : "v1", "w", swapped ? "v1" : "v2"};
  for (int i = 0; i < 4; ++i) rep.add("tripotent(" + nm[i] + ")", is_minimal_tripotent(u[i]));
  for (int i = 0; i < 4; ++i) {
    const auto& a = u[i];
    const auto& b = u[(i + 1) % 4];
    const auto& c = u[(i + 2) % 4];
    const auto& d = u[(i + 3) % 4];
    std::string tag = nm[i] + "," + nm[(i + 1) % 4];
    rep.add("peirce1(" + tag + ")", triple(a, a, b) == b && triple(b, b, a) == a);
    if (i < 2) rep.add("orthogonal(" + nm[i] + "," + nm[(i + 2) % 4] + ")", m.op_D(a, c).is_zero() && m.op_D(c, a).is_zero());
    TripleElement got = triple(a, b, c);
    rep.add("cyclic(" + tag + ")", got == d, "D(" + tag + ")" + nm[(i + 2) % 4] + " = " + to_string(got));
  }
  if (!swapped) {
    rep.add("D(e,w) = 0", m.op_D(m.e(), m.w()).is_zero());
    rep.add("D(v1,v2) = 0", m.op_D(m.v1(), m.v2()).is_zero());
    rep.add("D(v1,e)v1 = 0", triple(m.v1(), m.e(), m.v1()).is_zero());
    rep.add("D(v2,e)v2 = 0", triple(m.v2(), m.e(), m.v2()).is_zero());
    rep.add("D(e,v1)w = v2", triple(m.e(), m.v1(), m.w()) == m.v2());
    rep.add("D(v1,e)v2 = w", triple(m.v1(), m.e(), m.v2()) == m.w());
    rep.add("D(v1,v1)e = e", triple(m.v1(), m.v1(), m.e()) == m.e());
    rep.add("D(v2,v2)e = e", triple(m.v2(), m.v2(), m.e()) == m.e());
  }
  return rep;
}

CheckReport verify_sl2_relations(const JordanModel& m) {
  CheckReport rep;
  for (int j = 1; j <= 2; ++j) {
    std::string s = std::to_string(j);
    LinOp h = m.H(j), ep = m.E_plus(j), em = m.E_minus(j);
    rep.add("[H" + s + ",E" + s + "+] = 2E" + s + "+", commutator(h, ep) == ep.scaled(2));
    rep.add("[H" + s + ",E" + s + "-] = -2E" + s + "-", commutator(h, em) == em.scaled(-2));
    rep.add("[E" + s + "+,E" + s + "-] = H" + s, commutator(ep, em) == h);
  }
  for (int j = 1; j <= 2; ++j) {
    int k = 3 - j;
    std::string s = std::to_string(j), t = std::to_string(k);
    rep.add("[E" + s + "+,E" + t + "-] = 0", commutator(m.E_plus(j), m.E_minus(k)).is_zero());
    rep.add("[E" + s + "+,E" + t + "+] = 0", commutator(m.E_plus(j), m.E_plus(k)).is_zero());
    rep.add("[H" + s + ",E" + t + "+] = 0", commutator(m.H(j), m.E_plus(k)).is_zero());
    rep.add("[H" + s + ",E" + t + "-] = 0", commutator(m.H(j), m.E_minus(k)).is_zero());
  }
  rep.add("[E1,E2] = 0", commutator(m.E(1), m.E(2)).is_zero());
  rep.add("[H1,H2] = 0", commutator(m.H(1), m.H(2)).is_zero());
  return rep;
}

namespace {

using Laurent2Op = std::vector<Laurent2>;

Laurent2Op mul(const Laurent2Op& a, const Laurent2Op& b, std::size_t n) {
  Laurent2Op r(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return r;
}

// exp(s x_j E) for E annihilated by E(E^2+1)(E^2+4): spectral calculus with
// eigenvalues i*k, k in {-2..2}, each contributing e^{i s k x_j}.
Laurent2Op exp_rotation(const LinOp& E, std::size_t var, int s) {
  std::size_t n = E.dim();
  LinOp id = LinOp::identity(n);
  LinOp ann = E * (E * E + id) * (E * E + id.scaled(4));
  if (!ann.is_zero()) throw std::logic_error("torus generator has unexpected spectrum");
  Laurent2Op r(n * n);
  for (long k = -2; k <= 2; ++k) {
    LinOp proj = id;
    for (long kk = -2; kk <= 2; ++kk) {
      if (kk == k) continue;
      GaussianRational lam{Rational(0), Rational(k)}, mu{Rational(0), Rational(kk)};
      proj = proj * (E - id.scaled(mu)).scaled(GaussianRational(1) / (lam - mu));
    }
    if (proj.is_zero()) continue;
    std::array<long, 2> ex{};
    ex[var] = s * k;
    for (std::size_t i = 0; i < n * n; ++i)
      r[i] += Laurent2::monomial(ex) * Laurent2(proj.at(i / n, i % n));
  }
  return r;
}

TrigMatrix apply(const Laurent2Op& g, const TripleElement& u, std::size_t n) {
  TrigMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!u.flat()[j].is_zero()) r[i] += g[i * n + j] * u.flat()[j];
  return r;
}

// Substitute e^{i x_j} -> c_j + i s_j.
GaussianRational evaluate(const Laurent2& p, const std::array<GaussianRational, 2>& t) {
  GaussianRational s;
  for (const auto& [ex, c] : p.terms()) {
    GaussianRational v = c;
    for (std::size_t j = 0; j < 2; ++j) {
      GaussianRational base = ex[j] >= 0 ? t[j] : t[j].conj();
      for (long k = 0; k < std::abs(ex[j]); ++k) v *= base;
    }
    s += v;
  }
  return s;
}

}  // namespace

std::vector<Laurent2> torus_operator(const JordanModel& m, int sign) {
  std::size_t n = static_cast<std::size_t>(m.rows() * m.cols());
  return mul(exp_rotation(m.E(1), 0, sign), exp_rotation(m.E(2), 1, sign), n);
}

TrigMatrix torus_orbit(const JordanModel& m) {
  std::size_t n = static_cast<std::size_t>(m.rows() * m.cols());
  return apply(torus_operator(m, -1), m.e(), n);
}

TrigMatrix torus_closed_form(const JordanModel& m) {
  std::size_t n = static_cast<std::size_t>(m.rows() * m.cols());
  Laurent2 c1 = cos_poly<2>(0), c2 = cos_poly<2>(1), s1 = sin_poly<2>(0), s2 = sin_poly<2>(1);
  TrigMatrix r(n);
  auto put = [&](const TripleElement& u, const Laurent2& f) {
    for (std::size_t i = 0; i < n; ++i)
      if (!u.flat()[i].is_zero()) r[i] += f * u.flat()[i];
  };
  put(m.e(), c1 * c2);
  put(m.v1(), (s1 * c2) * GaussianRational(-1));
  put(m.v2(), (s2 * c1) * GaussianRational(-1));
  put(m.w(), s1 * s2);
  return r;
}

CheckReport verify_torus(const JordanModel& m) {
  CheckReport rep;
  std::size_t n = static_cast<std::size_t>(m.rows() * m.cols());
  rep.add("[E1,E2] = 0", commutator(m.E(1), m.E(2)).is_zero());
  TrigMatrix orbit = torus_orbit(m), closed = torus_closed_form(m);
  rep.add("exp(-x1E1-x2E2)e closed form", orbit == closed);

  // x2 = 0 slice and identity specialization.
  auto slice = [&](const TrigMatrix& t) {
    TrigMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [ex, c] : t[i].terms()) r[i].add_term({ex[0], 0}, c);
    return r;
  };
  TrigMatrix want(n);
  for (std::size_t i = 0; i < n; ++i) {
    want[i] += cos_poly<2>(0) * m.e().flat()[i];
    want[i] -= sin_poly<2>(0) * m.v1().flat()[i];
  }
  rep.add("x2 = 0 slice: cos x1 e - sin x1 v1", slice(orbit) == want);
  bool ident = true;
  for (std::size_t i = 0; i < n; ++i) ident = ident && orbit[i].at_identity() == m.e().flat()[i];
  rep.add("(x1,x2) = (0,0) gives e", ident);

  // <exp(x1E1+x2E2)e, e> = cos x1 cos x2
  TrigMatrix plus = apply(torus_operator(m, +1), m.e(), n);
  Laurent2 ip;
  for (std::size_t i = 0; i < n; ++i)
    if (!m.e().flat()[i].is_zero()) ip += plus[i] * m.e().flat()[i].conj();
  rep.add("<exp(x1E1+x2E2)e, e> = cos x1 cos x2", ip == cos_poly<2>(0) * cos_poly<2>(1));

  // Unitarity and automorphism at Pythagorean points.
  std::vector<GaussianRational> pts = {{Rational(3, 5), Rational(4, 5)},
                                       {Rational(5, 13), Rational(-12, 13)},
                                       {Rational(-8, 17), Rational(15, 17)}};
  auto g = torus_operator(m, +1);
  bool unitary = true, autom = true;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    std::array<GaussianRational, 2> t = {pts[a], pts[(a + 1) % pts.size()]};
    LinOp G(n);
    for (std::size_t i = 0; i < n * n; ++i) G.at(i / n, i % n) = evaluate(g[i], t);
    for (std::size_t i = 0; i < n && unitary; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GaussianRational s;
        for (std::size_t k = 0; k < n; ++k) s += G.at(k, i) * G.at(k, j).conj();
        if (s != GaussianRational(i == j ? 1 : 0)) unitary = false;
      }
    for (std::size_t i = 0; i < n && autom; ++i)
      for (std::size_t j = 0; j < n && autom; ++j)
        for (std::size_t k = 0; k < n && autom; ++k) {
          auto bi = m.basis(i), bj = m.basis(j), bk = m.basis(k);
          if (G.apply(triple(bi, bj, bk)) != triple(G.apply(bi), G.apply(bj), G.apply(bk))) autom = false;
        }
  }
  rep.add("exp(x1E1+x2E2) preserves <.,.> at rational points", unitary);
  rep.add("exp(x1E1+x2E2) is a triple automorphism at rational points", autom);
  return rep;
}

PeirceSplit peirce_split(const JordanModel& m, const TripleElement& u) {
  return {m.peirce(2).apply(u), m.peirce(1).apply(u), m.peirce(0).apply(u)};
}

CheckReport verify_mod_decomposition(const JordanModel& m, const TripleElement& u) {
  CheckReport rep;
  PeirceSplit s = peirce_split(m, u);
  TripleElement rest = u - m.e().scaled(inner(u, m.e())) - s.p1 - s.p0;
  rep.add("u - <u,e>e - P1u - P0u = 0", rest.is_zero(), to_string(rest));
  LinOp d = m.op_D(m.e(), m.e());
  bool eig = true;
  for (int j = 0; j <= 2; ++j) {
    TripleElement x = j == 2 ? s.p2 : (j == 1 ? s.p1 : s.p0);
    eig = eig && d.apply(x) == x.scaled(j);
  }
  rep.add("D(e,e)P_j u = j P_j u", eig);
  return rep;
}

CheckReport verify_jordan_all(long p, long q) {
  JordanModel m(p, q);
  CheckReport rep;
  rep.append(verify_quadrangle(m), "quadrangle: ");
  rep.append(verify_sl2_relations(m), "sl2: ");
  rep.append(verify_torus(m), "torus: ");

  LinOp id = LinOp::identity(static_cast<std::size_t>(p * q));
  LinOp p2 = m.peirce(2), p1 = m.peirce(1), p0 = m.peirce(0);
  rep.add("peirce: P2+P1+P0 = I", p2 + p1 + p0 == id);
  rep.add("peirce: projections idempotent", p2 * p2 == p2 && p1 * p1 == p1 && p0 * p0 == p0);
  LinOp d = m.op_D(m.e(), m.e());
  rep.add("peirce: D(e,e) has spectrum in {0,1,2}", d * (d - id) * (d - id.scaled(2)) == LinOp(id.dim()));

  TripleElement mix = m.e() + m.v1().scaled(2) + m.w().scaled(3);
  for (const auto& [name, u] : std::vector<std::pair<std::string, TripleElement>>{
           {"e", m.e()}, {"v1", m.v1()}, {"e+2v1+3w", mix}, {"E_{p,q}", TripleElement::unit(p, q, p - 1, q - 1)}})
    rep.append(verify_mod_decomposition(m, u), "mod(" + name + "): ");
  return rep;
}

}  // namespace ktrans
