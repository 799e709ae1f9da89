#pragma once

#include "pseudoknot/chord_diagram.hpp"
#include "pseudoknot/gauss.hpp"

namespace pk {

// How prechords with adjacent endpoints and zero decoration are removed.
// `fixpoint` repeats the deletion until nothing changes (a nested stack of
// pseudo-kinks disappears entirely); `single_pass` deletes only the
// prechords that are adjacent right after the classical arrows are gone.
enum class KinkDeletion { fixpoint, single_pass };

// The decorated chord diagram of g: precrossing arrows become plain chords,
// each decorated with the sum of the signs of the classical arrows that
// cross it; classical arrows are then dropped, and zero-decorated chords
// whose endpoints sit next to each other are deleted. Endpoint positions
// follow the order of the surviving prechord endpoints in g.
DecoratedChordDiagram compute_i(const PseudoGaussDiagram& g, KinkDeletion mode = KinkDeletion::fixpoint);

inline bool i_equal(const DecoratedChordDiagram& a, const DecoratedChordDiagram& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace pk
