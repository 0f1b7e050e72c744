#include <doctest.h>

#include "ktrans/analysis.hpp"
#include "ktrans/report.hpp"

using namespace ktrans;

TEST_CASE("reducibility on rank-two lattices") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  Reducibility r = reducibility_predicate(g, Rational(8));
  CHECK(r.reducible);
  CHECK(r.theorem_branch);
  REQUIRE(r.witness.has_value());
  CHECK(affine_factor(g, *r.witness).at(Rational(8)) == 0);
  CHECK_FALSE(reducibility_predicate(g, Rational(5)).reducible);
  CHECK_FALSE(reducibility_predicate(g, Rational(6)).reducible);
  CHECK(reducibility_predicate(g, Rational(0)).reducible);
  CHECK(reducibility_predicate(g, Rational(-4)).reducible);
  CHECK_FALSE(reducibility_predicate(g, make_rational(9, 2)).reducible);
}

TEST_CASE("rank-one candidate reduction points") {
  GroupDatum sp = group_datum(FamilySpec::III(2));
  Reducibility r = reducibility_predicate(sp, Rational(2));
  CHECK(r.reducible);
  CHECK_FALSE(r.theorem_branch);
  GroupDatum su = group_datum(FamilySpec::I1(3));
  CHECK(reducibility_predicate(su, Rational(-2)).reducible);
  CHECK_FALSE(reducibility_predicate(su, make_rational(1, 3)).reducible);
}

TEST_CASE("intertwining") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  CHECK(intertwining_equivalent(g, Rational(3), Rational(7)));
  CHECK(intertwining_equivalent(g, Rational(4), Rational(4)));
  CHECK_FALSE(intertwining_equivalent(g, Rational(3), Rational(6)));
}

TEST_CASE("graph construction") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  KTypeGraph gr = build_graph(g, Rational(5), 0);
  CHECK(gr.nodes.size() == 1);
  CHECK(gr.edges.empty());
  KTypeGraph g2 = build_graph(g, Rational(5), 2);
  const GraphEdge* e = g2.find(spherical(g), KType::rank_two(g.kind, 1, 1, 1));
  REQUIRE(e);
  CHECK(e->weight == make_rational(5, 2));
  for (const auto& x : g2.edges) CHECK(x.weight == transition(g, Rational(5), x.edge));
}

TEST_CASE("complementary scans") {
  auto delta = [](FamilySpec s) { return complementary_scan(group_datum(s), 8).computed_delta; };
  CHECK(delta(FamilySpec::I1(3)) == Rational(3));
  CHECK(delta(FamilySpec::IV(6)) == Rational(3));
  CHECK(delta(FamilySpec::II(8)) == Rational(3));
  CHECK(delta(FamilySpec::I(2, 0)) == Rational(1));
  CHECK(delta(FamilySpec::I(2, 2)) == Rational(1));
  CHECK_FALSE(delta(FamilySpec::I(2, 1)).has_value());
  CHECK(delta(FamilySpec::V()) == Rational(5));
  CHECK(delta(FamilySpec::VI()) == Rational(7));
  CHECK(delta(FamilySpec::III(3)) == Rational(3));

  ComplementaryScan v = complementary_scan(group_datum(FamilySpec::V()), 8);
  CHECK(v.table_delta == Rational(3));
  CHECK_FALSE(v.agrees);
  REQUIRE(v.binding_edge.has_value());

  ComplementaryScan sp = complementary_scan(group_datum(FamilySpec::III(3)), 8);
  REQUIRE(sp.with_l_only_moves.has_value());
  CHECK_FALSE(sp.with_l_only_moves->has_value());
}

TEST_CASE("schur constants") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  SchurTable t = schur_constants(g, Rational(5), 6);
  CHECK(t.consistent);
  CHECK(t.all_positive);
  CHECK_FALSE(t.partial);
  CHECK(t.constants.at(spherical(g)) == 1);
  CHECK(t.constants.at(KType::rank_two(g.kind, 1, 1, 1)) == make_rational(1, 6));
  CHECK(t.checked_cycles > 0);

  // Outside the interval some constant turns negative.
  SchurTable out = schur_constants(g, Rational(9), 6);
  CHECK(out.consistent);
  CHECK_FALSE(out.all_positive);

  // A reduction point cuts edges.
  SchurTable cut = schur_constants(g, Rational(8), 6);
  CHECK(cut.partial);
  CHECK_FALSE(cut.cut_edges.empty());
}

TEST_CASE("subrepresentation closure") {
  GroupDatum vi = group_datum(FamilySpec::VI());
  SubrepReport r = unitarizable_subreps(vi, Rational(8), 20);
  REQUIRE(r.readings.size() == 2);
  const SubrepReadingResult& diff = r.readings[0];
  CHECK(diff.reading == SubrepReading::MuDifference);
  CHECK(diff.minus.predicate == "mu1-mu2 <= 2");
  CHECK(diff.plus.predicate == "mu1-mu2 >= 14");
  CHECK(diff.minus.closed);
  CHECK_FALSE(diff.plus.closed);
  CHECK_THROWS_AS(unitarizable_subreps(vi, Rational(9), 6), PreconditionFailed);
  CHECK_THROWS_AS(unitarizable_subreps(group_datum(FamilySpec::I1(3)), Rational(-2), 6), PreconditionFailed);
}

TEST_CASE("composition candidates") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  CHECK(composition_candidates(g, Rational(5), 6).size() == 1);
  auto single = composition_candidates(g, Rational(5), 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].nodes.size() == 1);
  CHECK(composition_candidates(group_datum(FamilySpec::VI()), Rational(8), 8).size() >= 2);
}

TEST_CASE("graph emitters") {
  GroupDatum g = group_datum(FamilySpec::IV(6));
  std::string dot = emit_graph(build_graph(g, Rational(5), 0), GraphFormat::Dot);
  CHECK(dot.find("\"(0,0;0)\";") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
  KTypeGraph gr = build_graph(g, Rational(5), 2);
  std::string csv = emit_graph(gr, GraphFormat::Csv);
  CHECK(csv.rfind("src,dst,sigma,lshift,c,intercept,A\n", 0) == 0);
  CHECK(csv.find("\"(0,0;0)\",\"(1,1;1)\",++,1,4,0,5/2") != std::string::npos);
  std::string dot2 = emit_graph(gr, GraphFormat::Dot);
  CHECK(dot2.find("label=\"5/2\"") != std::string::npos);
  std::string dz = emit_graph(build_graph(g, Rational(0), 2), GraphFormat::Dot);
  CHECK(dz.find("dashed") != std::string::npos);
  CHECK(emit_graph(gr, GraphFormat::Json) == emit_graph(build_graph(g, Rational(5), 2), GraphFormat::Json));
}
