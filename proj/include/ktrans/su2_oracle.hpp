#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktrans/catalog.hpp"
#include "ktrans/scalars.hpp"

namespace ktrans {

// g = exp(xE) as [[cos x, sin x], [-sin x, cos x]] (Rotation) or
// [[ch x, sh x], [sh x, ch x]] (Hyperbolic, exponents count e^{x}).
enum class TorusForm { Rotation, Hyperbolic };
std::string to_string(TorusForm f);

using RatMatrix = std::vector<std::vector<Rational>>;

// S^m C^2 in the basis e1^k e2^{m-k}, k = 0..m.
struct SymPower {
  long m = 0;
  RatMatrix H, Eplus, Eminus;
  explicit SymPower(long m);
  // Column k holds g(e1^k e2^{m-k}); entry j is the coefficient of e1^j e2^{m-j}.
  std::vector<std::vector<Laurent1>> group_element(TorusForm form) const;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
bool sl2_relations_hold(const SymPower& s);
bool casimir_holds(const SymPower& s);

Laurent1 phi(long m, long l, TorusForm form = TorusForm::Rotation);
Laurent1 psi(long m, long l, TorusForm form = TorusForm::Rotation);
// Right derivatives (E^+ f)(g), (E^- f)(g) of phi and psi.
Laurent1 e_plus_phi(long m, long l, TorusForm form);
Laurent1 e_minus_phi(long m, long l, TorusForm form);
// <g e1, e2> and <g e2, e1>.
Laurent1 coefficient_12(TorusForm form);
Laurent1 coefficient_21(TorusForm form);

struct LemmaA1Report {
  long m = 0, l = 0;
  TorusForm form = TorusForm::Rotation;
  bool e_plus_phi = false;
  bool e_minus_phi = false;
  bool e_plus_psi_expl = false;
  bool e_minus_psi_expl = false;
  bool remark_e_plus_psi = false;
  bool remark_e_minus_psi = false;
  // Exact expansion <g e1,e2>(E^- psi) = A+ psi_{m+1,l+1} + B+ psi_{m-1,l+1} and
  // <g e2,e1>(E^+ psi) = A- psi_{m+1,l-1} + B- psi_{m-1,l-1}.
  Rational a_plus, b_plus, a_minus, b_minus;
  bool plus_decomposes = false;
  bool minus_decomposes = false;
  bool all_displayed_pass() const {
    return e_plus_phi && e_minus_phi && e_plus_psi_expl && e_minus_psi_expl && remark_e_plus_psi && remark_e_minus_psi;
  }
};

void check_sl2_params(long m, long l);
LemmaA1Report verify_lemma_A1(long m, long l, TorusForm form = TorusForm::Rotation);

// Coefficient of e^{i((m1+1)x1 + (m2+1)x2)} in
// (-sin x1 E^- psi_{m1,l})(k1) cos x2 psi_{m2,l}(k2) + (-sin x2 E^- psi_{m2,l})(k2) cos x1 psi_{m1,l}(k1).
Rational product_leading(long m1, long m2, long l);

}  // namespace ktrans
