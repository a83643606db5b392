#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>

#include "greenforge/polynomial.hpp"

using namespace greenforge;

TEST_CASE("parse and canonical text") {
  const auto p = PresentedPoly::parse("3*x^2*y - x*z + 4 + y^2*z", RingTag::XYZ);
  CHECK(p.str() == "y^2*z - x*z + 3*x^2*y + 4");
  CHECK(PresentedPoly::parse(p.str(), RingTag::XYZ) == p);
  CHECK(PresentedPoly::parse("x^2*y^3 - 2*x^3*y", RingTag::XY).str() == "x^2*y^3 - 2*x^3*y");
  CHECK(PresentedPoly::parse("-y", RingTag::XY).str() == "-y");
  CHECK(PresentedPoly::parse("y - y", RingTag::XY).is_zero());
  CHECK(PresentedPoly(RingTag::XY).str() == "0");
  CHECK(PresentedPoly::parse("2*3*x", RingTag::XY).coefficient({1, 0, 0}) == 6);
  CHECK(PresentedPoly::parse("x*x^2", RingTag::XY).coefficient({3, 0, 0}) == 1);
  CHECK(PresentedPoly::parse("x^-2*y", RingTag::LaurentXY).coefficient({-2, 1, 0}) == 1);
  CHECK_THROWS(PresentedPoly::parse("", RingTag::XY));
  CHECK_THROWS(PresentedPoly::parse("x +", RingTag::XY));
  CHECK_THROWS(PresentedPoly::parse("w", RingTag::XY));
  CHECK_THROWS(PresentedPoly::parse("x y", RingTag::XY));
}

TEST_CASE("ring tags constrain exponents") {
  CHECK_THROWS_AS(PresentedPoly::parse("z", RingTag::XY), std::domain_error);
  CHECK_THROWS_AS(PresentedPoly::parse("x^-1", RingTag::XYZ), std::domain_error);
  CHECK_THROWS_AS(PresentedPoly::parse("y^-1", RingTag::LaurentXY), std::domain_error);
  CHECK_NOTHROW(PresentedPoly::parse("x^-1*z", RingTag::LaurentXYZ));
  CHECK(to_string(RingTag::LaurentXYZ) == "Z[x,x^-1,y,z]");
}

TEST_CASE("x exponents reduce modulo n") {
  const auto p = PresentedPoly::parse("x^5*y + x^2*y - 1 + x^3", RingTag::XY, 3);
  CHECK(p.coefficient({2, 1, 0}) == 2);
  CHECK(p.is_zero() == false);
  CHECK(p.coefficient({0, 0, 0}) == 0);
  const auto xn = PresentedPoly::monomial(RingTag::XYZ, {4, 0, 0}, 1, 4);
  CHECK(xn == PresentedPoly::constant(RingTag::XYZ, 1, 4));
}

TEST_CASE("arithmetic") {
  const auto a = PresentedPoly::parse("y - x", RingTag::XY);
  const auto b = PresentedPoly::parse("y + x", RingTag::XY);
  CHECK(a * b == PresentedPoly::parse("y^2 - x^2", RingTag::XY));
  CHECK(a + b == PresentedPoly::parse("2*y", RingTag::XY));
  CHECK(a - a == PresentedPoly(RingTag::XY));
  CHECK(-a == PresentedPoly::parse("x - y", RingTag::XY));
  CHECK(a.scaled(3) == PresentedPoly::parse("3*y - 3*x", RingTag::XY));
  CHECK(a.shifted({1, 1, 0}) == PresentedPoly::parse("x*y^2 - x^2*y", RingTag::XY));
  CHECK_THROWS(a * PresentedPoly::parse("y", RingTag::XYZ));
  const auto big = PresentedPoly::constant(RingTag::XY, LLONG_MAX);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("order") {
  const auto p = PresentedPoly::parse("x^9*y^5 + y^2*z^2 - x*y^3*z", RingTag::XYZ);
  CHECK(p.order() == MonomialOrder{2, 2});
  CHECK(MonomialOrder{1, 0} > MonomialOrder{0, 7});
  CHECK_THROWS(PresentedPoly(RingTag::XY).order());
}

TEST_CASE("division in y") {
  const auto num = PresentedPoly::parse("y^3*z - x*y*z + x^2*z - x^3", RingTag::XYZ);
  const auto den = PresentedPoly::parse("y^2 - x", RingTag::XYZ);
  const DivisionResult r = divide_in_y(num, den);
  CHECK(r.quotient * den + r.remainder == num);
  CHECK(r.quotient == PresentedPoly::parse("y*z", RingTag::XYZ));
  CHECK(r.remainder == PresentedPoly::parse("x^2*z - x^3", RingTag::XYZ));

  const auto exact = divide_in_y(PresentedPoly::parse("y*z - x*y", RingTag::XYZ),
                                 PresentedPoly::parse("y", RingTag::XYZ));
  CHECK(exact.remainder.is_zero());
  CHECK(exact.quotient == PresentedPoly::parse("z - x", RingTag::XYZ));
  CHECK_THROWS(divide_in_y(num, PresentedPoly::parse("2*y", RingTag::XYZ)));
  CHECK_THROWS(divide_in_y(num, PresentedPoly(RingTag::XYZ)));
}
