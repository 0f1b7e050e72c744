#pragma once

#include <string>
#include <vector>

#include "ktrans/scalars.hpp"

namespace ktrans {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void append(const CheckReport& o, const std::string& prefix = {}) {
    for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }
};

// Element of the triple M_{p,q}(C) with Gaussian rational entries.
class TripleElement {
 public:
  TripleElement() = default;
  TripleElement(long p, long q) : p_(p), q_(q), m_(static_cast<std::size_t>(p * q)) {}
  static TripleElement unit(long p, long q, long i, long j);

  long rows() const { return p_; }
  long cols() const { return q_; }
  GaussianRational& at(long i, long j) { return m_[static_cast<std::size_t>(i * q_ + j)]; }
  const GaussianRational& at(long i, long j) const { return m_[static_cast<std::size_t>(i * q_ + j)]; }
  const std::vector<GaussianRational>& flat() const { return m_; }
  std::vector<GaussianRational>& flat() { return m_; }
  bool is_zero() const;

  TripleElement adjoint() const;
  TripleElement operator*(const TripleElement& o) const;  // matrix product
  TripleElement& operator+=(const TripleElement& o);
  TripleElement& operator-=(const TripleElement& o);
  TripleElement operator+(const TripleElement& o) const { return TripleElement(*this) += o; }
  TripleElement operator-(const TripleElement& o) const { return TripleElement(*this) -= o; }
  TripleElement scaled(const GaussianRational& s) const;
  bool operator==(const TripleElement& o) const { return p_ == o.p_ && q_ == o.q_ && m_ == o.m_; }
  bool operator!=(const TripleElement& o) const { return !(*this == o); }

 private:
  long p_ = 0, q_ = 0;
  std::vector<GaussianRational> m_;
};

std::string to_string(const TripleElement& u);

// tr(u v^*)
GaussianRational inner(const TripleElement& u, const TripleElement& v);
// D(u,v)z = u v^* z + z v^* u
TripleElement triple(const TripleElement& u, const TripleElement& v, const TripleElement& z);

// Complex-linear operator on M_{p,q}, in the row-major basis of unit matrices.
class LinOp {
 public:
  LinOp() = default;
  explicit LinOp(std::size_t n) : n_(n), a_(n * n) {}
  static LinOp identity(std::size_t n);
  std::size_t dim() const { return n_; }
  GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  LinOp operator*(const LinOp& o) const;
  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp scaled(const GaussianRational& s) const;
  bool is_zero() const;
  bool operator==(const LinOp& o) const { return n_ == o.n_ && a_ == o.a_; }
  TripleElement apply(const TripleElement& u) const;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianRational> a_;
};

LinOp commutator(const LinOp& x, const LinOp& y);

class JordanModel {
 public:
  JordanModel(long p, long q);
  long rows() const { return p_; }
  long cols() const { return q_; }

  // Standard quadrangle (E11, E12, E22, E21).
  const TripleElement& e() const { return e_; }
  const TripleElement& v1() const { return v1_; }
  const TripleElement& w() const { return w_; }
  const TripleElement& v2() const { return v2_; }
  const TripleElement& v(int j) const { return j == 1 ? v1_ : v2_; }

  LinOp op_D(const TripleElement& u, const TripleElement& v) const;
  LinOp E_plus(int j) const { return op_D(v(j), e_); }
  LinOp E_minus(int j) const { return op_D(e_, v(j)); }
  LinOp H(int j) const { return op_D(v(j), v(j)) - op_D(e_, e_); }
  LinOp E(int j) const { return E_plus(j) - E_minus(j); }

  // Peirce projections of D(e,e) with eigenvalue 2, 1, 0.
  LinOp peirce(int j) const;

  TripleElement basis(std::size_t k) const;

 private:
  long p_, q_;
  TripleElement e_, v1_, w_, v2_;
};

// Element of M_{p,q} whose entries are trigonometric polynomials in (x1,x2).
using TrigMatrix = std::vector<Laurent2>;

CheckReport verify_quadrangle(const JordanModel& model, bool swapped = false);
CheckReport verify_sl2_relations(const JordanModel& model);

// exp(-x1 E1 - x2 E2) as an operator with Laurent entries in e^{i x_j}.
std::vector<Laurent2> torus_operator(const JordanModel& model, int sign = -1);
// exp(-x1 E1 - x2 E2) e.
TrigMatrix torus_orbit(const JordanModel& model);
// cos x1 cos x2 e - (sin x1 cos x2 v1 + sin x2 cos x1 v2) + sin x1 sin x2 w.
TrigMatrix torus_closed_form(const JordanModel& model);
CheckReport verify_torus(const JordanModel& model);

struct PeirceSplit {
  TripleElement p2, p1, p0;
};
PeirceSplit peirce_split(const JordanModel& model, const TripleElement& u);
CheckReport verify_mod_decomposition(const JordanModel& model, const TripleElement& u);

// Everything above on M_{p,q}.
CheckReport verify_jordan_all(long p, long q);

}  // namespace ktrans
