#include <doctest.h>

#include "ktrans/scalars.hpp"

using namespace ktrans;

TEST_CASE("rational parsing round-trips") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1.5"));
}

TEST_CASE("gamma ratios") {
  CHECK(gamma_ratio(Rational(1), 3) == 6);
  CHECK(gamma_ratio(make_rational(1, 2), 2) == make_rational(3, 4));
  CHECK(gamma_ratio(Rational(3), -2) == make_rational(1, 2));
  CHECK(gamma_ratio(Rational(-2), 3) == 0);
  CHECK_THROWS_AS(gamma_ratio(Rational(1), -2), PoleEncountered);
  CHECK(gamma_quotient(Rational(5), Rational(3)) == 12);
  CHECK(gamma_quotient(make_rational(5, 2), make_rational(1, 2)) == make_rational(3, 4));
}

TEST_CASE("regularized gamma quotient reports orders") {
  // Gamma(-1 + 2 eps) / Gamma(1 + 2 eps) has a simple pole.
  EpsMonomial m = gamma_quotient_eps(Rational(-1), Rational(1), Rational(2));
  CHECK(m.order == -1);
  // Gamma(1)/Gamma(-1 + eps t) vanishes to first order.
  EpsMonomial z = gamma_quotient_eps(Rational(1), Rational(-1), Rational(1));
  CHECK(z.order == 1);
  EpsMonomial f = gamma_quotient_eps(Rational(4), Rational(2), Rational(1));
  CHECK(f.order == 0);
  CHECK(f.lead == 6);
}

TEST_CASE("gaussian arithmetic") {
  GaussianRational a{Rational(1), Rational(2)}, b{Rational(3), Rational(-1)};
  CHECK(a * b == GaussianRational{Rational(5), Rational(5)});
  CHECK(a.conj() == GaussianRational{Rational(1), Rational(-2)});
  CHECK(a.norm2() == 5);
  CHECK(kI * kI == GaussianRational(-1));
}

TEST_CASE("laurent polynomials") {
  Laurent1 c = cos_poly<1>(), s = sin_poly<1>();
  Laurent1 one = c * c + s * s;
  CHECK(one == Laurent1(GaussianRational(1)));
  CHECK(c.at_identity() == GaussianRational(1));
  CHECK(s.at_identity() == GaussianRational(0));
  Laurent2 x = cos_poly<2>(0) * cos_poly<2>(1);
  CHECK(x.coeff({1, 1}) == GaussianRational(make_rational(1, 4)));
  auto lt = leading_term(x);
  CHECK(lt.first == std::array<long, 2>{1, 1});
  CHECK_THROWS_AS(leading_term(Laurent1()), ZeroPolynomial);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(10) == 3628800);
}
