#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pseudoknot/chord_diagram.hpp"
#include "pseudoknot/pd.hpp"

namespace pk {

// A precrossing v next to a tangle T of precrossings. Two adjacent legs
// of v (slots first_leg_slot+2 and +3, counterclockwise) run into T; the
// other two leave to the rest of the diagram. T meets the rest through
// exactly four edges: boundary[0..1] are the two shared with v,
// boundary[2..3] the other two, in counterclockwise order around T.
struct FlypeSite {
  int crossing = 0;
  std::vector<int> tangle;  // vertex ids, ascending
  int first_leg_slot = 0;
  std::array<int, 4> boundary{};

  friend bool operator==(const FlypeSite&, const FlypeSite&) = default;
};

// Validates and completes a site from the crossing and tangle ids. Throws
// ValidationError when the pair is not a flype site of d.
FlypeSite make_flype_site(const PseudoPD& d, int crossing, std::vector<int> tangle);

// Every site with a nonempty connected tangle, by crossing id and then
// tangle subset. Exponential in the vertex count; meant for small inputs.
std::vector<FlypeSite> enumerate_flype_sites(const PseudoPD& d);

// Carries the crossing to the far side of the tangle and turns the tangle
// over, so the two strands still meet the same outside edges. Vertex ids
// are kept. An empty tangle returns d.
PseudoPD shadow_flype_pd(const PseudoPD& d, const FlypeSite& site);

// A run of consecutive endpoint positions (cyclic).
struct Arc {
  std::size_t start = 0;
  std::size_t length = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Type I: each endpoint of the flype chord sits at an end of a different
// arc and jumps to that arc's other end. Type II: the flype chord wraps
// arc a and moves to wrap arc b.
enum class FlypeType { I, II };

struct ChordFlypeSite {
  std::size_t chord = 0;  // position of either endpoint of the flype chord
  Arc a;
  Arc b;
  FlypeType type = FlypeType::I;
  friend bool operator==(const ChordFlypeSite&, const ChordFlypeSite&) = default;
};

// Moves the flype chord as described by the type; every other endpoint
// keeps its relative order and decoration. The arcs must be disjoint,
// avoid the flype chord, and be closed (a chord with one endpoint in
// a or b has the other there too). Throws ValidationError otherwise.
DecoratedChordDiagram chord_flype(const DecoratedChordDiagram& c, const ChordFlypeSite& site);

// The chord-level site matching a PD site, on the positions of
// pd_to_gauss(d).
ChordFlypeSite chord_site_for(const PseudoPD& d, const FlypeSite& site);

// Adds two precrossings to the twist through the bigon between precrossings
// a and b. Returns the new diagram and the ids of the new vertices next to
// a and next to b.
struct TwistExtension {
  PseudoPD diagram;
  int next_to_a = 0;
  int next_to_b = 0;
};
TwistExtension extend_twist(const PseudoPD& d, int a, int b);

// The seven-precrossing shadow whose resolutions give the 7_7 were-set.
// Ids 1..7; {1,2} and {3,4} are its two twists.
PseudoPD p1_shadow();

// First member: p1_shadow with the {3,4} twist grown to m precrossings and
// the {1,2} twist to n. Second member: its flype at crossing 7 across the
// m-twist. m and n must be even and at least 2.
struct FamilyPair {
  PseudoPD first;
  PseudoPD second;
  FlypeSite site;
};
FamilyPair family(int m, int n);

// Chord diagram of the first family member written down directly: two
// bands of m and n nested chords. Accepts any m, n >= 1; odd values fail
// evenness_check.
DecoratedChordDiagram family_chord_template(int m, int n);

}  // namespace pk
