#include <map>
#include <random>

#include "doctest.h"
#include "pseudoknot/chord_diagram.hpp"
#include "pseudoknot/error.hpp"

using namespace pk;
using Chord = DecoratedChordDiagram::Chord;

namespace {

// All perfect matchings on 2m points.
void matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  auto it = std::find(partner.begin(), partner.end(), -1);
  if (it == partner.end()) {
    out.push_back(partner);
    return;
  }
  const int a = static_cast<int>(it - partner.begin());
  for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
    if (partner[b] != -1) continue;
    partner[a] = b;
    partner[b] = a;
    matchings(partner, out);
    partner[a] = partner[b] = -1;
  }
}

DecoratedChordDiagram from_partner(const std::vector<int>& partner, const std::vector<std::int64_t>& deco) {
  std::vector<Chord> chords;
  std::size_t k = 0;
  for (std::size_t a = 0; a < partner.size(); ++a) {
    const auto b = static_cast<std::size_t>(partner[a]);
    if (a < b) chords.push_back({a, b, deco[k++]});
  }
  return DecoratedChordDiagram(partner.size(), chords);
}

// Orbit representative by trying every rotation.
std::vector<Chord> brute_key(const DecoratedChordDiagram& c) {
  std::vector<Chord> best = c.chords();
  for (std::size_t k = 1; k < c.endpoint_count(); ++k) {
    auto r = c.rotated(k).chords();
    auto less = [](const Chord& x, const Chord& y) {
      return std::tie(x.a, x.b, x.decoration) < std::tie(y.a, y.b, y.decoration);
    };
    if (std::lexicographical_compare(r.begin(), r.end(), best.begin(), best.end(), less)) best = r;
  }
  return best;
}

DecoratedChordDiagram random_diagram(std::mt19937_64& rng, std::size_t m, int deco_range) {
  std::vector<std::size_t> pos(2 * m);
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::vector<Chord> chords;
  for (std::size_t i = 0; i < m; ++i) {
    auto a = pos[2 * i], b = pos[2 * i + 1];
    if (a > b) std::swap(a, b);
    chords.push_back({a, b, static_cast<std::int64_t>(rng() % (2 * deco_range + 1)) - deco_range});
  }
  return DecoratedChordDiagram(2 * m, chords);
}

}  // namespace

TEST_CASE("construction validates the matching") {
  CHECK_NOTHROW(DecoratedChordDiagram(4, {{0, 2, 0}, {1, 3, 5}}));
  CHECK_THROWS_AS(DecoratedChordDiagram(4, {{0, 2, 0}}), ValidationError);
  CHECK_THROWS_AS(DecoratedChordDiagram(4, {{0, 2, 0}, {2, 3, 0}}), ValidationError);
  CHECK_THROWS_AS(DecoratedChordDiagram(4, {{0, 4, 0}, {1, 3, 0}}), ValidationError);
  CHECK(DecoratedChordDiagram().empty());
}

TEST_CASE("three interleaved chords: every rotation gives the same encoding") {
  const DecoratedChordDiagram c(6, {{0, 3, 0}, {1, 4, 0}, {2, 5, 0}});
  for (std::size_t k = 0; k < 6; ++k) CHECK(canonical_form(c.rotated(k)) == canonical_form(c));
  CHECK(to_hex(canonical_form(c)) == "06030003000300030003000300");
  CHECK(evenness_check(c));
}

TEST_CASE("crossing and non-crossing pairs differ") {
  const DecoratedChordDiagram crossing(4, {{0, 2, 0}, {1, 3, 0}});
  const DecoratedChordDiagram nested(4, {{0, 3, 0}, {1, 2, 0}});
  CHECK(canonical_form(crossing) != canonical_form(nested));
  CHECK(!evenness_check(crossing));
  CHECK(evenness_check(nested));
  CHECK(crossing.interleaved(0, 1));
  CHECK(!nested.interleaved(0, 1));
}

TEST_CASE("decorations and reflections are distinguished") {
  const DecoratedChordDiagram a(4, {{0, 3, 1}, {1, 2, 0}});
  const DecoratedChordDiagram b(4, {{0, 3, 0}, {1, 2, 1}});
  CHECK(canonical_form(a) == canonical_form(b));  // rotation by 1 swaps the roles
  const DecoratedChordDiagram c(4, {{0, 3, 2}, {1, 2, 0}});
  CHECK(canonical_form(a) != canonical_form(c));

  // A chirally asymmetric pattern and its reflection.
  const DecoratedChordDiagram d(8, {{0, 2, 0}, {1, 5, 0}, {3, 6, 0}, {4, 7, 1}});
  std::vector<Chord> refl;
  for (const Chord& ch : d.chords()) refl.push_back({7 - ch.b, 7 - ch.a, ch.decoration});
  CHECK(canonical_form(d) != canonical_form(DecoratedChordDiagram(8, refl)));
}

TEST_CASE("encoding is exactly the rotation orbit, exhaustively up to five chords") {
  for (std::size_t m = 0; m <= 5; ++m) {
    std::vector<int> partner(2 * m, -1);
    std::vector<std::vector<int>> all;
    matchings(partner, all);
    auto less = [](const std::vector<Chord>& x, const std::vector<Chord>& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Chord& p, const Chord& q) {
        return std::tie(p.a, p.b, p.decoration) < std::tie(q.a, q.b, q.decoration);
      });
    };
    std::map<std::vector<Chord>, std::vector<std::uint8_t>, decltype(less)> orbit_code(less);
    std::map<std::vector<std::uint8_t>, std::vector<Chord>> code_orbit;
    const unsigned deco_patterns = m <= 4 ? (1U << m) : 1U;
    for (const auto& p : all) {
      for (unsigned bits = 0; bits < deco_patterns; ++bits) {
        std::vector<std::int64_t> deco(m);
        for (std::size_t i = 0; i < m; ++i) deco[i] = (bits >> i & 1) ? -1 : 0;
        const DecoratedChordDiagram c = from_partner(p, deco);
        const auto code = canonical_form(c);
        const auto key = brute_key(c);
        auto [it, fresh] = orbit_code.emplace(key, code);
        CHECK(it->second == code);
        auto [it2, fresh2] = code_orbit.emplace(code, key);
        CHECK(it2->second == key);
        CHECK(canonical_form(c.rotated(least_rotation(c))) == code);
      }
    }
  }
}

TEST_CASE("random diagrams up to eight chords") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 1 + rng() % 8;
    const DecoratedChordDiagram a = random_diagram(rng, m, 2);
    const DecoratedChordDiagram b = trial % 2 ? a.rotated(rng() % (2 * m)) : random_diagram(rng, m, 2);
    CHECK((canonical_form(a) == canonical_form(b)) == (brute_key(a) == brute_key(b)));
  }
}

TEST_CASE("hex and empty diagram") {
  CHECK(to_hex({0x00, 0xab, 0x7f}) == "00ab7f");
  CHECK(to_hex(canonical_form(DecoratedChordDiagram())) == "00");
}
