#include <stdexcept>

#include "doctest.h"
#include "pseudoknot/laurent.hpp"

using pk::LaurentPolynomial;

TEST_CASE("zero and constants") {
  LaurentPolynomial z;
  CHECK(z.is_zero());
  CHECK(LaurentPolynomial(0).is_zero());
  CHECK(LaurentPolynomial(3).coefficient(0) == 3);
  CHECK(LaurentPolynomial(3).to_string("t") == "3");
  CHECK(z.to_string("t") == "0");
}

TEST_CASE("arithmetic") {
  const auto a = LaurentPolynomial::monomial(1, 1);
  const auto delta = -(a * a) - a.pow(2).reflected();
  CHECK(delta == LaurentPolynomial::from_terms({{2, -1}, {-2, -1}}));
  // A * delta + A^-1 is the bracket of a positive kink.
  CHECK(a * delta + a.reflected() == LaurentPolynomial::monomial(-1, 3));
  CHECK((delta - delta).is_zero());
  CHECK(delta.pow(0) == LaurentPolynomial(1));
  CHECK(delta.pow(3) == delta * delta * delta);
  CHECK(delta.min_exponent() == -2);
  CHECK(delta.max_exponent() == 2);
}

TEST_CASE("from_terms merges and drops zeros") {
  const auto p = LaurentPolynomial::from_terms({{3, 1}, {-1, 2}, {3, -1}, {0, 0}});
  CHECK(p == LaurentPolynomial::monomial(2, -1));
  CHECK(p.terms().size() == 1);
}

TEST_CASE("exponent maps") {
  const auto p = LaurentPolynomial::from_terms({{-4, -1}, {-3, 1}, {-1, 1}});
  CHECK(p.reflected() == LaurentPolynomial::from_terms({{4, -1}, {3, 1}, {1, 1}}));
  CHECK(p.scaled_exponents(-4).divided_exponents(-4) == p);
  CHECK_THROWS_AS(p.divided_exponents(2), std::domain_error);
}

TEST_CASE("text forms round trip") {
  const auto p = LaurentPolynomial::from_terms({{-4, -1}, {-3, 1}, {-1, 1}});
  CHECK(p.to_string("t") == "-t^-4 + t^-3 + t^-1");
  CHECK(p.to_term_list() == "-4:-1,-3:1,-1:1");
  CHECK(LaurentPolynomial::from_term_list(p.to_term_list()) == p);
  CHECK(LaurentPolynomial::from_term_list("").is_zero());
  CHECK_THROWS(LaurentPolynomial::from_term_list("1:"));
  CHECK_THROWS(LaurentPolynomial::from_term_list("x"));
}

TEST_CASE("overflow is detected") {
  const auto big = LaurentPolynomial(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("ordering is total and consistent with equality") {
  const auto a = LaurentPolynomial::from_terms({{0, 1}});
  const auto b = LaurentPolynomial::from_terms({{1, 1}});
  CHECK((a < b) != (b < a));
  CHECK(!(a < a));
}
