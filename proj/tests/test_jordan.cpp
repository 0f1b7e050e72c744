#include <doctest.h>

#include "ktrans/jordan_model.hpp"

using namespace ktrans;

namespace {

void require_all(const CheckReport& r) {
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("triple product on 2x2") {
  JordanModel m(2, 2);
  // {e, e, e} = 2e for a tripotent.
  CHECK(triple(m.e(), m.e(), m.e()) == m.e().scaled(2));
  CHECK(triple(m.v1(), m.v1(), m.v1()) == m.v1().scaled(2));
  CHECK(inner(m.e(), m.e()) == GaussianRational(1));
  CHECK(inner(m.e(), m.w()) == GaussianRational(0));
}

TEST_CASE("quadrangle conditions") {
  require_all(verify_quadrangle(JordanModel(2, 2)));
  require_all(verify_quadrangle(JordanModel(3, 2)));
}

TEST_CASE("sl2 relations") {
  require_all(verify_sl2_relations(JordanModel(2, 2)));
  require_all(verify_sl2_relations(JordanModel(3, 2)));
}

TEST_CASE("torus formula") {
  require_all(verify_torus(JordanModel(2, 2)));
  require_all(verify_torus(JordanModel(3, 2)));
}

TEST_CASE("peirce decomposition") {
  JordanModel m(3, 2);
  TripleElement u = m.v1() + m.w().scaled(kI) + m.e();
  PeirceSplit s = peirce_split(m, u);
  CHECK(s.p2 + s.p1 + s.p0 == u);
  CHECK(s.p2 == m.e());
  CHECK(s.p1 == m.v1());
  CHECK(s.p0 == m.w().scaled(kI));
  require_all(verify_mod_decomposition(m, u));
}

TEST_CASE("full battery") {
  CHECK(verify_jordan_all(2, 2).all_pass());
  CHECK(verify_jordan_all(3, 2).all_pass());
  CHECK(verify_jordan_all(2, 2).checks.size() > 40);
}
