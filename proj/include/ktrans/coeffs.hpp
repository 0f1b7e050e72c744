#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ktrans/catalog.hpp"
#include "ktrans/ktypes.hpp"
#include "ktrans/scalars.hpp"

namespace ktrans {

class InadmissibleTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shift of the spectral argument between numerator and denominator C.
//   Target:  y' = s_sigma(mu + sigma + rho) = y + (1,1) for pure sign changes.
//   Literal: y' = y + sigma.
enum class ShiftReading { Target, Literal };
// Middle Gamma of the eps-product: Gamma(a1/2 + (y1+eps y2)/2) or the literal
// Gamma(a1/2 + (y1+eps y2)).
enum class HalfReading { Halved, Literal };
// Weyl representative: pure sign change, or sign change after swapping roots.
enum class WeylRep { SignChange, SwapThenSign };

struct COptions {
  ShiftReading shift = ShiftReading::Target;
  HalfReading half = HalfReading::Halved;
  WeylRep weyl = WeylRep::SignChange;
};

std::string to_string(ShiftReading s);
std::string to_string(HalfReading h);
std::string to_string(WeylRep w);

using RatPair = std::pair<Rational, Rational>;
RatPair weyl_image(int sigma1, int sigma2, const RatPair& v, WeylRep rep = WeylRep::SignChange);

// C(y, l) / C(y2, l2) for y = i*lambda, with Gamma arguments perturbed along a
// fixed generic direction so that poles and zeros are reported as eps orders.
EpsMonomial c_quotient_eps(const GroupDatum& g, const RatPair& y, long l, const RatPair& y2, long l2, const COptions& opt = {});
// Same quotient without regularization; throws PoleEncountered.
Rational c_quotient(const GroupDatum& g, const RatPair& y, long l, const RatPair& y2, long l2, const COptions& opt = {});

// Spectral arguments (numerator, denominator) of an edge.
std::pair<RatPair, RatPair> c_arguments(const GroupDatum& g, const KType& source, int sigma1, int sigma2, const COptions& opt = {});

Rational c_ratio_gamma(const GroupDatum& g, const KType& source, int sigma1, int sigma2, int lshift, const COptions& opt = {});

enum class GammaStatus { Finite, Vanishes, Undefined };
std::string to_string(GammaStatus s);
struct GammaProbe {
  GammaStatus status = GammaStatus::Finite;
  Rational value;  // finite value, or the leading coefficient otherwise
  long order = 0;
};
// Pole-aware evaluation; allowed on inadmissible targets.
GammaProbe c_ratio_gamma_probe(const GroupDatum& g, const KType& source, int sigma1, int sigma2, int lshift, const COptions& opt = {});

// Same edge evaluated through an intermediate C value: shifting the spectral
// argument first (mu_first) or the central character first.  The two halves are
// pooled and re-paired, since each alone may have half-integral Gamma gaps.
GammaProbe c_ratio_gamma_path(const GroupDatum& g, const KType& source, int sigma1, int sigma2, int lshift, bool mu_first, const COptions& opt = {});

Rational c_ratio_oracle(const GroupDatum& g, const KType& source, int sigma1, int sigma2, int lshift);

struct AffineFactor {
  Rational intercept;
  Rational at(const Rational& nu) const { return nu + intercept; }
};

AffineFactor affine_factor(const GroupDatum& g, const Edge& e);
Rational prefactor(const GroupDatum& g);

enum class Provenance { GammaFormula, DiskOracle, Both };
std::string to_string(Provenance p);

struct TransitionCoefficient {
  Rational prefactor;
  AffineFactor affine;
  Rational c_ratio;
  Provenance provenance = Provenance::GammaFormula;
  Rational value(const Rational& nu) const { return prefactor * affine.at(nu) * c_ratio; }
};

TransitionCoefficient transition_coefficient(const GroupDatum& g, const Edge& e, const COptions& opt = {});
Rational transition(const GroupDatum& g, const Rational& nu, const Edge& e);

// Sum of c over admissible targets for one lshift.
Rational identity_sum(const GroupDatum& g, const KType& source, int lshift, const COptions& opt = {});
// The constant the identity sum must reach: 4 for rank-two kinds, 2 for
// su(d,1), 4 for sp(r,R) (counted with the l-only moves).
Rational identity_sum_target(const GroupDatum& g);

}  // namespace ktrans
