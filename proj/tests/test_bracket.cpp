#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracle/naive_bracket.hpp"
#include "pseudoknot/bracket.hpp"
#include "pseudoknot/error.hpp"
#include "pseudoknot/gauss.hpp"

using namespace pk;

namespace {

LaurentPolynomial t_poly(std::vector<std::pair<int, LaurentPolynomial::Coefficient>> terms) {
  return LaurentPolynomial::from_terms(terms);
}

}  // namespace

TEST_CASE("small values") {
  CHECK(kauffman_bracket(ResolvedPD(PseudoPD())) == LaurentPolynomial(1));
  CHECK(jones(ResolvedPD(PseudoPD())) == LaurentPolynomial(1));

  const ResolvedPD kink = resolve(parse_pd(corpus::kink_shadow), std::vector<int>{1});
  CHECK(writhe(kink) == 1);
  CHECK(kauffman_bracket(kink) == LaurentPolynomial::monomial(-1, 3));
  CHECK(jones(kink) == LaurentPolynomial(1));
  const ResolvedPD neg_kink = resolve(parse_pd(corpus::kink_shadow), std::vector<int>{-1});
  CHECK(kauffman_bracket(neg_kink) == LaurentPolynomial::monomial(-1, -3));
}

TEST_CASE("trefoils and figure eight") {
  const ResolvedPD neg(parse_pd(corpus::trefoil_negative));
  CHECK(jones(neg) == t_poly({{-4, -1}, {-3, 1}, {-1, 1}}));
  CHECK(jones(mirror(neg)) == t_poly({{4, -1}, {3, 1}, {1, 1}}));
  const ResolvedPD fig8(parse_pd(corpus::figure_eight));
  CHECK(jones(fig8) == t_poly({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("sweep equals the naive state sum on the corpus") {
  for (const PseudoPD& d : corpus::classical_diagrams()) {
    const ResolvedPD r(d);
    CHECK(kauffman_bracket(r) == oracle::to_laurent(oracle::naive_bracket(d.vertices())));
  }
  const PseudoPD p1 = parse_pd(corpus::p1_shadow);
  for (unsigned long long mask = 0; mask < 128; mask += 5) {
    const ResolvedPD r = resolve_mask(p1, mask);
    CHECK(kauffman_bracket(r) == oracle::to_laurent(oracle::naive_bracket(r.vertices())));
  }
}

TEST_CASE("sweep equals the naive state sum on virtual diagrams") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<GaussToken> tokens;
    for (int id = 1; id <= n; ++id) {
      const int sign = rng() % 2 ? 1 : -1;
      tokens.push_back({id, false, true, sign});
      tokens.push_back({id, false, false, sign});
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    const PseudoPD d = gauss_to_pd(PseudoGaussDiagram(tokens));
    CHECK(kauffman_bracket(ResolvedPD(d)) == oracle::to_laurent(oracle::naive_bracket(d.vertices())));
  }
}

TEST_CASE("jones of the mirror reflects t") {
  for (const PseudoPD& d : corpus::classical_diagrams()) {
    const ResolvedPD r(d);
    CHECK(jones(mirror(r)) == jones(r).reflected());
  }
}

TEST_CASE("substitution rejects exponents off the lattice") {
  CHECK_THROWS_AS(jones_from_normalized_bracket(LaurentPolynomial::monomial(1, 2)), InternalError);
  CHECK(jones_from_normalized_bracket(LaurentPolynomial::monomial(1, -8)) == LaurentPolynomial::monomial(1, 2));
}
