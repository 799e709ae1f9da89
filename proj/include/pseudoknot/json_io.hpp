#pragma once

#include <json.hpp>

#include "pseudoknot/chord_diagram.hpp"
#include "pseudoknot/flype.hpp"
#include "pseudoknot/gauss.hpp"
#include "pseudoknot/knot_table.hpp"
#include "pseudoknot/laurent.hpp"
#include "pseudoknot/moves.hpp"
#include "pseudoknot/pd.hpp"
#include "pseudoknot/wereset.hpp"

namespace pk {

using Json = nlohmann::ordered_json;

// Field names are stable. Readers accept what the writers emit, ignore
// unknown fields, and throw ParseError on missing or mistyped fields and
// ValidationError when the decoded value breaks a type invariant.

// {"vertices":[{"id","kind":"X+"|"X-"|"P","edges":[a,b,c,d]}], "pd": text}
Json to_json(const PseudoPD& d);
PseudoPD pd_from_json(const Json& j);

// {"tokens":[{"id","kind":"O"|"U"|"Pt"|"Ph","sign"}], "code": text}
// Reading uses "code" when present.
Json to_json(const PseudoGaussDiagram& g);
PseudoGaussDiagram gauss_from_json(const Json& j);

// {"endpoints": 2m, "chords":[[a,b,decoration]], "canonical": hex}
Json to_json(const DecoratedChordDiagram& c);
DecoratedChordDiagram chord_diagram_from_json(const Json& j);

// {"terms":[[exponent,coefficient]], "text": "..."}
Json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const Json& j);

// {"precrossings","total","entries":[{"knot","count","probability"}],
//  "unknown":[{"jones","count","probability"}]}; entries in table order.
Json to_json(const WereSet& w);
WereSet wereset_from_json(const Json& j);

// {"entries":[{"name","crossing_number","amphichiral","jones"}]}
Json to_json(const KnotTable& t);
KnotTable knot_table_from_json(const Json& j);

// {"crossing","tangle":[ids],"first_leg_slot","boundary":[4 edges]}
Json to_json(const FlypeSite& s);
FlypeSite flype_site_from_json(const Json& j);

// {"chord","a":{"start","length"},"b":{...},"type":"I"|"II"}
Json to_json(const ChordFlypeSite& s);
ChordFlypeSite chord_flype_site_from_json(const Json& j);

// {"kind","at":[positions],"sign","head_first","antiparallel"}
Json to_json(const MoveSite& s);
MoveSite move_site_from_json(const Json& j);

// Parses text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace pk
