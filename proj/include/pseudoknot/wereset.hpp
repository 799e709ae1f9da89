#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pseudoknot/knot_table.hpp"
#include "pseudoknot/pd.hpp"

namespace pk {

// Exact distribution of knot types over the 2^k equally likely
// resolutions of a pseudodiagram with k precrossings. Resolutions whose
// Jones polynomial is not in the table are bucketed by that polynomial.
struct WereSet {
  std::size_t precrossings = 0;
  std::map<KnotName, std::uint64_t> counts;
  std::map<LaurentPolynomial, std::uint64_t> unknown;

  std::uint64_t total() const { return std::uint64_t{1} << precrossings; }
  std::uint64_t count(const KnotName& name) const;

  // count / 2^k reduced, as "p/q".
  static std::string probability(std::uint64_t count, std::size_t precrossings);

  WereSet& operator+=(const WereSet& other);
  friend bool operator==(const WereSet&, const WereSet&) = default;
};

// Enumerates every resolution; `workers` threads split the choice masks
// into contiguous ranges and their partial counts are added. The result
// does not depend on the worker count. Throws InternalError if the counts
// do not sum to 2^k.
WereSet wereset(const PseudoPD& d, const KnotTable& table, unsigned workers = 1);

inline bool wereset_equal(const WereSet& a, const WereSet& b) { return a == b; }

// {{0_1,72},{-3_1,10},...}: integer counts, table order.
std::string render_paper_style(const WereSet& w);

// One line per entry: "name count/total = p/q".
std::string render_text(const WereSet& w);

}  // namespace pk
