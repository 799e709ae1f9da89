#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "pseudoknot/bracket.hpp"
#include "pseudoknot/error.hpp"
#include "pseudoknot/flype.hpp"
#include "pseudoknot/gauss.hpp"
#include "pseudoknot/invariant.hpp"
#include "pseudoknot/wereset.hpp"

using namespace pk;

namespace {

const KnotTable& table() {
  static const KnotTable t = load_table_file(corpus::data_path("knot_table.txt"));
  return t;
}

std::string chord_hex(const PseudoPD& d) { return to_hex(canonical_form(underlying_chord_diagram(pd_to_gauss(d)))); }

std::string i_hex(const PseudoPD& d) { return to_hex(canonical_form(compute_i(pd_to_gauss(d)))); }

PseudoPD p2() { return parse_pd(corpus::read_file(corpus::data_path("p2.pd"))); }

}  // namespace

TEST_CASE("the base shadow has two twists and a flype site across one of them") {
  const PseudoPD p1 = p1_shadow();
  CHECK(p1.size() == 7);
  CHECK(p1.is_shadow());
  CHECK(parse_pd(corpus::read_file(corpus::data_path("p1.pd"))) == p1);
  const FlypeSite s = make_flype_site(p1, 7, {4, 3});
  CHECK(s.tangle == std::vector<int>{3, 4});
  CHECK(s.crossing == 7);
  std::set<int> bd(s.boundary.begin(), s.boundary.end());
  CHECK(bd.size() == 4);
}

TEST_CASE("flyping the base shadow gives the second shadow") {
  const PseudoPD p1 = p1_shadow();
  const PseudoPD flyped = shadow_flype_pd(p1, make_flype_site(p1, 7, {3, 4}));
  CHECK(flyped.size() == 7);
  CHECK(flyped.is_shadow());
  CHECK(is_planar(flyped));
  CHECK(same_up_to_edge_relabeling(flyped, p2()));
  CHECK(chord_hex(flyped) != chord_hex(p1));
  CHECK(i_hex(flyped) != i_hex(p1));
  CHECK(wereset(flyped, table()) == wereset(p1, table()));
}

TEST_CASE("resolutions correspond by precrossing id") {
  const PseudoPD p1 = p1_shadow();
  const PseudoPD q = shadow_flype_pd(p1, make_flype_site(p1, 7, {3, 4}));
  for (unsigned long long mask = 0; mask < 128; ++mask) {
    CHECK(jones(resolve_mask(p1, mask)) == jones(resolve_mask(q, mask)));
  }
}

TEST_CASE("flyping back restores the diagram") {
  const PseudoPD p1 = p1_shadow();
  for (const FlypeSite& s : enumerate_flype_sites(p1)) {
    const PseudoPD q = shadow_flype_pd(p1, s);
    const PseudoPD back = shadow_flype_pd(q, make_flype_site(q, s.crossing, s.tangle));
    CHECK(chord_hex(back) == chord_hex(p1));
  }
}

TEST_CASE("empty tangles and invalid sites") {
  const PseudoPD p1 = p1_shadow();
  const FlypeSite empty = make_flype_site(p1, 7, {});
  CHECK(shadow_flype_pd(p1, empty) == p1);
  CHECK_THROWS_AS(make_flype_site(p1, 7, {7}), ValidationError);
  CHECK_THROWS_AS(make_flype_site(p1, 7, {1, 3}), ValidationError);
  CHECK_THROWS_AS(make_flype_site(p1, 99, {3}), ValidationError);
  FlypeSite wrong = make_flype_site(p1, 7, {3, 4});
  wrong.boundary[0] += 100;
  CHECK_THROWS_AS(shadow_flype_pd(p1, wrong), ValidationError);

  const PseudoPD mixed = parse_pd("X-(6,13,7,0) P(0,5,1,6) P(10,1,11,2) X-(2,9,3,10) P(12,4,13,3) P(4,8,5,7) P(8,12,9,11)");
  CHECK_THROWS_AS(make_flype_site(mixed, 7, {3, 4}), ValidationError);
}

TEST_CASE("every site of the base shadow keeps the were-set") {
  const PseudoPD p1 = p1_shadow();
  const auto sites = enumerate_flype_sites(p1);
  CHECK(sites.size() >= 10);
  CHECK(std::find(sites.begin(), sites.end(), make_flype_site(p1, 7, {3, 4})) != sites.end());
  const WereSet w = wereset(p1, table());
  std::set<std::string> images;
  for (const FlypeSite& s : sites) {
    const PseudoPD q = shadow_flype_pd(p1, s);
    CHECK(is_planar(q));
    CHECK(wereset(q, table()) == w);
    images.insert(chord_hex(q));
  }
  CHECK(images.size() == 2);
}

TEST_CASE("chord-level flype agrees with the planar one") {
  const PseudoPD p1 = p1_shadow();
  const ChordFlypeSite base = chord_site_for(p1, make_flype_site(p1, 7, {3, 4}));
  CHECK(base.type == FlypeType::II);
  int type_one = 0;
  for (const FlypeSite& s : enumerate_flype_sites(p1)) {
    const ChordFlypeSite cs = chord_site_for(p1, s);
    if (cs.type == FlypeType::I) ++type_one;
    const auto moved = chord_flype(underlying_chord_diagram(pd_to_gauss(p1)), cs);
    CHECK(to_hex(canonical_form(moved)) == chord_hex(shadow_flype_pd(p1, s)));
  }
  CHECK(type_one > 0);
}

TEST_CASE("chord-level flype rejects bad sites") {
  const auto c = underlying_chord_diagram(parse_gauss("Ph1,Pt2,Ph3,Pt1,Ph2,Pt3"));
  CHECK(chord_flype(c, {0, {0, 0}, {0, 0}, FlypeType::I}) == c);
  CHECK_THROWS_AS(chord_flype(c, {0, {1, 1}, {2, 1}, FlypeType::I}), ValidationError);
  CHECK_THROWS_AS(chord_flype(c, {9, {1, 1}, {4, 1}, FlypeType::I}), ValidationError);
  CHECK_THROWS_AS(chord_flype(c, {0, {1, 2}, {2, 2}, FlypeType::II}), ValidationError);
}

TEST_CASE("twist extension") {
  const PseudoPD p1 = p1_shadow();
  const TwistExtension x = extend_twist(p1, 3, 4);
  CHECK(x.diagram.size() == 9);
  CHECK(is_planar(x.diagram));
  CHECK(x.next_to_a == 8);
  CHECK(x.next_to_b == 9);
  CHECK_NOTHROW(extend_twist(x.diagram, 3, 8));
  CHECK_NOTHROW(extend_twist(x.diagram, 8, 9));
  CHECK_THROWS_AS(extend_twist(p1, 3, 4 + 3), ValidationError);
  CHECK_THROWS_AS(extend_twist(p1, 3, 3), ValidationError);
}

TEST_CASE("family members") {
  const FamilyPair base = family(2, 2);
  CHECK(same_up_to_edge_relabeling(base.first, p1_shadow()));
  CHECK(chord_hex(base.second) == chord_hex(p2()));
  for (int m = 2; m <= 6; m += 2) {
    for (int n = 2; n <= 6; n += 2) {
      INFO("m=", m, " n=", n);
      const FamilyPair f = family(m, n);
      CHECK(f.first.size() == static_cast<std::size_t>(3 + m + n));
      CHECK(f.first.is_shadow());
      CHECK(f.second.is_shadow());
      CHECK(is_planar(f.first));
      CHECK(is_planar(f.second));
      const auto i1 = compute_i(pd_to_gauss(f.first));
      const auto i2 = compute_i(pd_to_gauss(f.second));
      CHECK_FALSE(i_equal(i1, i2));
      for (const auto& ch : i1.chords()) CHECK(ch.decoration == 0);
      CHECK(evenness_check(i1));
      CHECK(evenness_check(i2));
      CHECK(to_hex(canonical_form(family_chord_template(m, n))) == chord_hex(f.first));
      const ChordFlypeSite cs = chord_site_for(f.first, f.site);
      CHECK(to_hex(canonical_form(chord_flype(underlying_chord_diagram(pd_to_gauss(f.first)), cs))) ==
            chord_hex(f.second));
    }
  }
  CHECK_THROWS_AS(family(3, 2), ValidationError);
  CHECK_THROWS_AS(family(2, 0), ValidationError);
  CHECK_THROWS_AS(family(-2, 2), ValidationError);
  CHECK_FALSE(evenness_check(family_chord_template(3, 2)));
  CHECK_FALSE(evenness_check(family_chord_template(2, 5)));
  CHECK(evenness_check(family_chord_template(4, 2)));
}

TEST_CASE("family pairs share were-sets") {
  const FamilyPair f = family(4, 2);
  CHECK(wereset(f.first, table(), 4) == wereset(f.second, table(), 4));
}
