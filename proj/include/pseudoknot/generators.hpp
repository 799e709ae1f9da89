#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "pseudoknot/pd.hpp"

namespace pk {

enum class BraidCrossing { positive, negative, pre };

// sigma_generator with the given crossing kind; generators are 1-based.
struct BraidLetter {
  int generator = 1;
  BraidCrossing kind = BraidCrossing::pre;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// "1 -2 p1 3": a signed generator is classical, a p prefix a precrossing.
std::vector<BraidLetter> parse_braid(std::string_view text);

// Closure of a braid on `strands` strands, letter i becoming vertex i+1.
// Throws ValidationError unless every generator occurs and the closure is
// a knot.
PseudoPD braid_closure(int strands, const std::vector<BraidLetter>& word);

// A knot shadow with `precrossings` vertices: the closure of a uniformly
// random word of precrossing letters on `strands` strands, redrawn until
// it closes to a knot. The strand count is clamped to 2..precrossings+1
// and moved by one when its parity cannot give a knot.
PseudoPD random_shadow(std::mt19937_64& rng, std::size_t precrossings, int strands = 3);

}  // namespace pk
