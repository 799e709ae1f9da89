#pragma once

#include <string>

#include "pseudoknot/chord_diagram.hpp"
#include "pseudoknot/gauss.hpp"

namespace pk {

// SVG drawings on a 400x400 canvas. The core circle runs counterclockwise
// (marked by an arrowhead at the top) and endpoint 0 sits at the top.
// Classical chords are arrows from over to under pass labelled with their
// sign; prechords are drawn bold without arrowheads. Output depends only on
// the input.
std::string render_svg(const PseudoGaussDiagram& g);

// Chords labelled with their decorations.
std::string render_svg(const DecoratedChordDiagram& c);

}  // namespace pk
