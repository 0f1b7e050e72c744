#include <doctest.h>

#include "ktrans/coeffs.hpp"

using namespace ktrans;

TEST_CASE("corner value") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  KType z = spherical(g);
  CHECK(c_ratio_gamma(g, z, 1, 1, 1) == 4);
  CHECK(c_ratio_gamma(g, z, 1, 1, -1) == 4);
}

TEST_CASE("transition weights") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  Edge e = neighbors(g, spherical(g))[1];
  CHECK(transition(g, Rational(5), e) == make_rational(5, 2));
  CHECK(transition(g, Rational(5), e.reversed()) == make_rational(-5, 12));
  TransitionCoefficient t = transition_coefficient(g, e.reversed());
  CHECK(t.prefactor == make_rational(1, 8));
  CHECK(t.affine.intercept == -10);
  CHECK(t.c_ratio == make_rational(2, 3));
  CHECK(t.provenance == Provenance::GammaFormula);
}

TEST_CASE("rank-two intercepts") {
  GroupDatum g = group_datum(FamilySpec::VI());
  KType s = KType::rank_two(g.kind, 4, 2, 0);
  auto icpt = [&](int a, int b) { return affine_factor(g, Edge{s, shifted(s, a, b, 1), a, b, 1}).intercept; };
  CHECK(icpt(1, 1) == 6);
  CHECK(icpt(1, -1) == 2 - 2 * g.rho2);
  CHECK(icpt(-1, 1) == -2 - 2 * g.rho1);
  CHECK(icpt(-1, -1) == -6 - 2 * g.rho_g + 2);
}

TEST_CASE("inadmissible targets") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  KType z = spherical(g);
  CHECK_THROWS_AS(c_ratio_gamma(g, z, -1, -1, 1), InadmissibleTarget);
  GammaProbe p = c_ratio_gamma_probe(g, z, -1, -1, 1);
  CHECK(p.status != GammaStatus::Finite);
}

TEST_CASE("identity sums") {
  for (auto s : {FamilySpec::IV(6), FamilySpec::II(8), FamilySpec::VI(), FamilySpec::I(2, 1)}) {
    GroupDatum g = group_datum(s);
    for (const auto& k : enumerate(g, 5))
      for (int ls : {1, -1}) CHECK(identity_sum(g, k, ls) == 4);
  }
  GroupDatum su = group_datum(FamilySpec::I1(4));
  for (const auto& k : enumerate(su, 6))
    for (int ls : {1, -1}) CHECK(identity_sum(su, k, ls) == 2);
  GroupDatum sp = group_datum(FamilySpec::III(3));
  for (const auto& k : enumerate(sp, 6))
    for (int ls : {1, -1}) CHECK(identity_sum(sp, k, ls) == 4);
}

TEST_CASE("literal readings break the identity sum") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  COptions lit;
  lit.shift = ShiftReading::Literal;
  long bad = 0;
  for (const auto& k : enumerate(g, 4))
    for (int ls : {1, -1}) {
      try {
        bad += identity_sum(g, k, ls, lit) != 4;
      } catch (const PoleEncountered&) {
        ++bad;
      }
    }
  CHECK(bad > 0);
  COptions half;
  half.half = HalfReading::Literal;
  CHECK(identity_sum(g, spherical(g), 1, half) != 4);
}

TEST_CASE("product lattice provenance") {
  GroupDatum g = group_datum(FamilySpec::I(3, 1));
  Edge e = neighbors(g, KType::rank_two(g.kind, 1, 1, 1))[0];
  TransitionCoefficient t = transition_coefficient(g, e);
  CHECK(t.provenance == Provenance::Both);
  GroupDatum su = group_datum(FamilySpec::I1(3));
  CHECK(transition_coefficient(su, neighbors(su, spherical(su))[0]).provenance == Provenance::DiskOracle);
}
