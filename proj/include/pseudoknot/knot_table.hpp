#pragma once

#include <compare>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoknot/laurent.hpp"
#include "pseudoknot/pd.hpp"

namespace pk {

// "3_1" or its mirror "-3_1". Names of amphichiral knots and the unknot
// never carry the mirror flag.
struct KnotName {
  std::string base;
  bool mirrored = false;

  static KnotName parse(std::string_view text);
  std::string to_string() const { return (mirrored ? "-" : "") + base; }

  // Leading number of the base name ("7" in "7_7").
  int crossing_number() const;

  // Crossing number, then the base name by index, mirror image first.
  friend std::strong_ordering operator<=>(const KnotName& a, const KnotName& b);
  friend bool operator==(const KnotName&, const KnotName&) = default;
};

struct KnotEntry {
  KnotName name;
  int crossing_number = 0;
  bool amphichiral = false;
  LaurentPolynomial jones;

  friend bool operator==(const KnotEntry&, const KnotEntry&) = default;
};

// Named Jones polynomials with the mirror and amphichirality invariants
// checked at construction: pairwise distinct polynomials, every chiral
// entry paired with its mirror whose polynomial is reflected in t, every
// amphichiral entry symmetric and unsigned.
class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotEntry> entries);

  const std::vector<KnotEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const KnotEntry* find(const LaurentPolynomial& jones) const;
  const KnotEntry* find(const KnotName& name) const;

  friend bool operator==(const KnotTable&, const KnotTable&) = default;

 private:
  std::vector<KnotEntry> entries_;  // sorted by name
};

struct KnotSource {
  std::string name;  // unsigned base name
  ResolvedPD diagram;
};

// One entry per amphichiral source, two per chiral one: the source's own
// chirality keeps the plain name and the mirror gets the minus sign.
// Throws ValidationError on an empty source list or any table invariant
// violation.
KnotTable build_table(const std::vector<KnotSource>& sources);

// "name PD" lines; '#' starts a comment line; a lone name is the unknot.
std::vector<KnotSource> read_sources(std::istream& in);

// Line format: "name crossing_number amphichiral e:c,e:c,..."
void write_table(std::ostream& out, const KnotTable& table);
KnotTable read_table(std::istream& in);

// Environment variable holding the default table path.
inline constexpr const char* kTableEnvironmentVariable = "PSEUDOKNOT_TABLE";

KnotTable load_table_file(const std::string& path);

struct Classification {
  std::optional<KnotName> name;  // empty when the polynomial is not in the table
  LaurentPolynomial jones;
};

Classification classify(const ResolvedPD& d, const KnotTable& table);

}  // namespace pk
