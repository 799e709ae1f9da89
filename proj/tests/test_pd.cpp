#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "pseudoknot/error.hpp"
#include "pseudoknot/gauss.hpp"
#include "pseudoknot/pd.hpp"

using namespace pk;

namespace {

PseudoPD shadow_of(const PseudoPD& d) {
  std::vector<Vertex> vs = d.vertices();
  for (Vertex& v : vs) {
    v.kind = VertexKind::precrossing;
    v.sign = 0;
  }
  return PseudoPD(vs);
}

std::vector<int> choice_from_mask(std::size_t k, unsigned long long mask) {
  std::vector<int> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = (mask >> i & 1) ? 1 : -1;
  return c;
}

}  // namespace

TEST_CASE("parse and print") {
  const PseudoPD t = parse_pd(corpus::trefoil_shadow);
  CHECK(t.size() == 3);
  CHECK(t.precrossing_count() == 3);
  CHECK(t.is_shadow());
  // Precrossings are rotated to start at their smaller incoming edge.
  CHECK(t.to_string() == "P(3,1,4,6) P(1,5,2,4) P(2,5,3,6)");
  CHECK(parse_pd(t.to_string()) == t);

  // Arbitrary labels are renumbered along the strand.
  const PseudoPD shifted = parse_pd("P(15,12,10,13) P(13,10,14,11) P(11,14,12,15)");
  CHECK(shifted == t);

  CHECK(parse_pd("").empty());
  CHECK(parse_pd("  \n").empty());
  CHECK(parse_pd("X\xE2\x88\x92(6,3,1,4) X-(4,1,5,2) X-(2,5,3,6)") == parse_pd(corpus::trefoil_negative));
}

TEST_CASE("P1 shadow parses with seven precrossings") {
  const PseudoPD p1 = parse_pd(corpus::p1_shadow);
  CHECK(p1.size() == 7);
  CHECK(p1.is_shadow());
  CHECK(is_planar(p1));
  CHECK(p1.precrossing_ids() == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_pd("P(1,2,3,4) Q(1,2,3,4)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 11);
  }
  CHECK_THROWS_AS(parse_pd("P(1,2,3)"), ParseError);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2)"), ParseError);
  CHECK_THROWS_AS(parse_pd("P(1,1,2,2"), ParseError);
}

TEST_CASE("validation errors") {
  // Edge 1 three times.
  CHECK_THROWS_AS(parse_pd("X+(1,4,2,1) X+(1,2,3,4)"), ValidationError);
  // Two-component clasp shadow.
  CHECK_THROWS_AS(parse_pd("P(1,2,3,4) P(2,1,4,3)"), ValidationError);
  // Sign disagrees with orientation.
  CHECK_THROWS_AS(parse_pd("X+(6,3,1,4) X-(4,1,5,2) X-(2,5,3,6)"), ValidationError);
  // Slot 0 outgoing.
  CHECK_THROWS_AS(parse_pd("X-(1,4,6,3) X-(4,1,5,2) X-(2,5,3,6)"), ValidationError);
}

TEST_CASE("two-precrossing knot shadow") {
  const PseudoPD d = gauss_to_pd(parse_gauss("Ph1,Pt1,Ph2,Pt2"));
  const PseudoPD again = parse_pd(d.to_string());
  CHECK(again.size() == 2);
  CHECK(again.precrossing_count() == 2);
  CHECK(is_planar(again));
}

TEST_CASE("resolve") {
  const PseudoPD t = parse_pd(corpus::trefoil_shadow);
  const std::vector<int> plus{1, 1, 1};
  const ResolvedPD r = resolve(t, plus);
  CHECK(writhe(r) == 3);
  for (const Vertex& v : r.vertices()) CHECK(v.sign == 1);
  const std::vector<int> minus{-1, -1, -1};
  CHECK(resolve(t, minus).pd() == parse_pd(corpus::trefoil_negative));
  CHECK(writhe(resolve(t, minus)) == -3);

  const std::vector<int> short_choice{1, 1};
  CHECK_THROWS_AS(resolve(t, short_choice), ValidationError);
  const std::vector<int> bad{1, 0, 1};
  CHECK_THROWS_AS(resolve(t, bad), ValidationError);

  const PseudoPD c = parse_pd(corpus::figure_eight);
  CHECK(resolve(c, std::vector<int>{}).pd() == c);
  CHECK(resolve_mask(t, 0b111).pd() == r.pd());
}

TEST_CASE("mirror") {
  const PseudoPD t = parse_pd(corpus::trefoil_shadow);
  CHECK(mirror(t) == t);
  const ResolvedPD pos = resolve(t, std::vector<int>{1, 1, 1});
  CHECK(mirror(pos).pd() == parse_pd(corpus::trefoil_negative));
  CHECK(writhe(mirror(pos)) == -3);
  for (const PseudoPD& d : corpus::classical_diagrams()) {
    CHECK(mirror(mirror(d)) == d);
    CHECK(writhe(mirror(ResolvedPD(d))) == -writhe(ResolvedPD(d)));
  }
  CHECK(writhe(ResolvedPD(PseudoPD())) == 0);
}

TEST_CASE("mirror of a resolution is the negated resolution of the mirror") {
  std::vector<PseudoPD> shadows{parse_pd(corpus::trefoil_shadow), parse_pd(corpus::kink_shadow)};
  for (const auto& [name, text] : corpus::sources("knot_sources.pd")) {
    const PseudoPD d = parse_pd(text);
    if (!d.empty() && d.size() <= 6) shadows.push_back(shadow_of(d));
  }
  for (const PseudoPD& d : shadows) {
    const std::size_t k = d.precrossing_count();
    for (unsigned long long mask = 0; mask < (1ULL << k); ++mask) {
      std::vector<int> c = choice_from_mask(k, mask);
      std::vector<int> neg = c;
      for (int& x : neg) x = -x;
      CHECK(mirror(resolve(d, c)) == resolve(mirror(d), neg));
    }
  }
}

TEST_CASE("traversal and planarity") {
  for (const PseudoPD& d : corpus::classical_diagrams()) {
    const std::vector<Pass> passes = traverse(d);
    CHECK(passes.size() == 2 * d.size());
    if (d.empty()) continue;
    CHECK(d.vertices()[passes[0].vertex].edges[static_cast<std::size_t>(passes[0].slot)] == 1);
    std::set<std::pair<std::size_t, int>> seen;
    for (const Pass& p : passes) seen.insert({p.vertex, p.slot});
    CHECK(seen.size() == passes.size());
    CHECK(is_planar(d));
    CHECK(face_count(d) == d.size() + 2);
  }
  // The arrow of a crossing reversed in a trefoil code gives a virtual knot.
  const PseudoPD virt = gauss_to_pd(parse_gauss("O1+,U2+,U3+,U1+,O2+,O3+"));
  CHECK(!is_planar(virt));
}

TEST_CASE("edge relabeling equivalence") {
  const PseudoPD a = parse_pd(corpus::figure_eight);
  CHECK(same_up_to_edge_relabeling(a, a));
  CHECK(!same_up_to_edge_relabeling(a, mirror(a)));
  CHECK(!same_up_to_edge_relabeling(a, parse_pd(corpus::trefoil_negative)));
}
