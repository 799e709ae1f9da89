#include "pseudoknot/knot_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pseudoknot/bracket.hpp"
#include "pseudoknot/error.hpp"

namespace pk {
namespace {

// (crossing number, index) of "c_i"; names without that shape sort last.
std::pair<long, long> name_numbers(const std::string& base) {
  const auto us = base.find('_');
  long c = 0, i = 0;
  if (us == std::string::npos) return {1L << 40, 0};
  auto r1 = std::from_chars(base.data(), base.data() + us, c);
  auto r2 = std::from_chars(base.data() + us + 1, base.data() + base.size(), i);
  if (r1.ec != std::errc() || r2.ec != std::errc()) return {1L << 40, 0};
  return {c, i};
}

}  // namespace

KnotName KnotName::parse(std::string_view text) {
  KnotName n;
  if (!text.empty() && text[0] == '-') {
    n.mirrored = true;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty knot name", 0);
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) throw ParseError("knot name contains whitespace", 0);
  }
  n.base = std::string(text);
  return n;
}

int KnotName::crossing_number() const {
  const auto [c, i] = name_numbers(base);
  return static_cast<int>(c);
}

std::strong_ordering operator<=>(const KnotName& a, const KnotName& b) {
  const auto na = name_numbers(a.base);
  const auto nb = name_numbers(b.base);
  if (auto c = na <=> nb; c != 0) return c;
  if (auto c = a.base <=> b.base; c != 0) return c;
  return b.mirrored <=> a.mirrored;  // mirror first
}

KnotTable::KnotTable(std::vector<KnotEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const KnotEntry& x, const KnotEntry& y) { return x.name < y.name; });
  std::set<LaurentPolynomial> seen_jones;
  std::set<std::string> seen_names;
  for (const KnotEntry& e : entries_) {
    const std::string n = e.name.to_string();
    if (!seen_names.insert(n).second) throw ValidationError("duplicate table entry " + n);
    if (!seen_jones.insert(e.jones).second) {
      throw ValidationError("Jones polynomial of " + n + " is not distinct from an earlier entry");
    }
    if (e.crossing_number != e.name.crossing_number()) {
      throw ValidationError("entry " + n + " has crossing number " + std::to_string(e.crossing_number));
    }
    const bool symmetric = e.jones == e.jones.reflected();
    if (e.amphichiral) {
      if (!symmetric) throw ValidationError("amphichiral entry " + n + " has a non-symmetric Jones polynomial");
      if (e.name.mirrored) throw ValidationError("amphichiral entry " + n + " carries a mirror sign");
    } else {
      if (symmetric) throw ValidationError("chiral entry " + n + " has a symmetric Jones polynomial");
    }
  }
  for (const KnotEntry& e : entries_) {
    if (e.amphichiral) continue;
    const KnotEntry* m = find(KnotName{e.name.base, !e.name.mirrored});
    if (m == nullptr) throw ValidationError("chiral entry " + e.name.to_string() + " has no mirror entry");
    if (m->jones != e.jones.reflected() || m->amphichiral) {
      throw ValidationError("mirror of " + e.name.to_string() + " does not have the reflected Jones polynomial");
    }
  }
}

const KnotEntry* KnotTable::find(const LaurentPolynomial& jones) const {
  for (const KnotEntry& e : entries_) {
    if (e.jones == jones) return &e;
  }
  return nullptr;
}

const KnotEntry* KnotTable::find(const KnotName& name) const {
  for (const KnotEntry& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

KnotTable build_table(const std::vector<KnotSource>& sources) {
  if (sources.empty()) throw ValidationError("knot table needs at least one source diagram");
  std::vector<KnotEntry> entries;
  for (const KnotSource& s : sources) {
    const KnotName name = KnotName::parse(s.name);
    if (name.mirrored) throw ValidationError("source names are unsigned: " + s.name);
    const LaurentPolynomial j = jones(s.diagram);
    const bool amphichiral = j == j.reflected();
    entries.push_back({name, name.crossing_number(), amphichiral, j});
    if (!amphichiral) entries.push_back({KnotName{name.base, true}, name.crossing_number(), false, j.reflected()});
  }
  return KnotTable(std::move(entries));
}

std::vector<KnotSource> read_sources(std::istream& in) {
  std::vector<KnotSource> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto sp = line.find_first_of(" \t", first);
    const std::string name = line.substr(first, sp == std::string::npos ? std::string::npos : sp - first);
    const std::string pd = sp == std::string::npos ? std::string() : line.substr(sp);
    out.push_back({name, ResolvedPD(parse_pd(pd))});
  }
  return out;
}

void write_table(std::ostream& out, const KnotTable& table) {
  for (const KnotEntry& e : table.entries()) {
    out << e.name.to_string() << ' ' << e.crossing_number << ' ' << (e.amphichiral ? 1 : 0) << ' '
        << e.jones.to_term_list() << '\n';
  }
}

KnotTable read_table(std::istream& in) {
  std::vector<KnotEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string name, jones_text, rest;
    int crossings = 0, amph = 0;
    if (!(fields >> name >> crossings >> amph >> jones_text) || (fields >> rest) || (amph != 0 && amph != 1)) {
      throw ParseError("malformed knot table line " + std::to_string(line_no), 0);
    }
    entries.push_back({KnotName::parse(name), crossings, amph == 1, LaurentPolynomial::from_term_list(jones_text)});
  }
  return KnotTable(std::move(entries));
}

KnotTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open knot table " + path);
  return read_table(in);
}

Classification classify(const ResolvedPD& d, const KnotTable& table) {
  Classification c;
  c.jones = jones(d);
  if (const KnotEntry* e = table.find(c.jones)) c.name = e->name;
  return c;
}

}  // namespace pk
