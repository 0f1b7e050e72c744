#include <doctest.h>

#include "ktrans/catalog.hpp"

using namespace ktrans;

TEST_CASE("type IV datum") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  CHECK(g.kind == LatticeKind::Generic2);
  CHECK(g.r == 2);
  CHECK(g.a == 4);
  CHECK(g.d == 6);
  CHECK(g.p == 6);
  CHECK(g.rho_g == 5);
  CHECK(g.rho1 == 3);
  CHECK(g.rho2 == 1);
  CHECK(g.a1 == 2);
  CHECK(g.b1 == 0);
}

TEST_CASE("exceptional data") {
  GroupDatum v = group_datum(FamilySpec::V());
  CHECK(v.d == 16);
  CHECK(v.p == 12);
  CHECK(v.rho_g == 11);
  GroupDatum vi = group_datum(FamilySpec::VI());
  CHECK(vi.d == 27);
  CHECK(vi.p == 18);
  CHECK(vi.rho_g == 17);
  CHECK(vi.rho1 == 11);
  CHECK(vi.rho2 == 5);
}

TEST_CASE("type I uses a product of two VMRT factors") {
  GroupDatum g = group_datum(FamilySpec::I(2, 1));
  CHECK(g.kind == LatticeKind::ProductSU);
  REQUIRE(g.vmrt.size() == 2);
  CHECK(g.vmrt[0].b == 1);
  CHECK(g.vmrt[1].b == 0);
  CHECK(g.rho_g == 4);
  CHECK(g.rho1 == 2);
  CHECK(g.rho2 == 1);
}

TEST_CASE("rank one data") {
  GroupDatum su = group_datum(FamilySpec::I1(3));
  CHECK(su.kind == LatticeKind::RankOne);
  CHECK(su.d == 3);
  CHECK(su.rho_g == 3);
  GroupDatum sp = group_datum(FamilySpec::III(3));
  CHECK(sp.kind == LatticeKind::SpDoubled);
  CHECK(sp.d == 6);
  CHECK(sp.rho_g == 3);
}

TEST_CASE("illegal parameters are rejected") {
  CHECK_THROWS_AS(group_datum(FamilySpec::IV(4)), IllegalParameters);
  CHECK_THROWS_AS(group_datum(FamilySpec::III(1)), IllegalParameters);
  CHECK_THROWS_AS(group_datum(FamilySpec::I(1, 0)), IllegalParameters);
  CHECK_THROWS_AS(group_datum(FamilySpec::II(3)), IllegalParameters);
  CHECK_THROWS_AS(parse_family_spec("VII"), IllegalParameters);
  CHECK_THROWS_AS(parse_family_spec("IV"), IllegalParameters);
  CHECK_THROWS_AS(parse_family_spec("IV x"), IllegalParameters);
  CHECK_THROWS_AS(parse_family_spec("V 2"), IllegalParameters);
}

TEST_CASE("spec parsing") {
  FamilySpec s = parse_family_spec("I 3 2");
  CHECK(s.family == Family::TypeI);
  CHECK(s.p1 == 3);
  CHECK(s.p2 == 2);
  CHECK(to_string(parse_family_spec(std::vector<std::string>{"IV", "8"})) == "IV 8");
  CHECK(to_string(parse_family_spec("VI")) == "VI");
}

TEST_CASE("duality values") {
  DualityReport d = duality_check(group_datum(FamilySpec::VI()));
  CHECK(d.holds);
  CHECK(d.lhs == 2);
  CHECK(duality_check(group_datum(FamilySpec::I(3, 2))).holds);
  CHECK(duality_check(group_datum(FamilySpec::III(4))).holds);
}

TEST_CASE("complementary table") {
  CHECK(complementary_table_value(group_datum(FamilySpec::I(2, 1))) == Rational(2));
  CHECK(complementary_table_value(group_datum(FamilySpec::IV(6))) == Rational(3));
  CHECK(complementary_table_value(group_datum(FamilySpec::V())) == Rational(3));
  CHECK(complementary_table_value(group_datum(FamilySpec::VI())) == Rational(5));
  CHECK(complementary_table_value(group_datum(FamilySpec::I1(4))) == Rational(4));
  CHECK_FALSE(complementary_table_value(group_datum(FamilySpec::III(2))).has_value());
  CHECK(complementary_table_value(group_datum(FamilySpec::III(5))) == Rational(3));
}
