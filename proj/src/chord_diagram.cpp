#include "pseudoknot/chord_diagram.hpp"

#include <algorithm>
#include <utility>

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

using Symbol = std::pair<std::size_t, std::int64_t>;

std::vector<Symbol> symbols(const DecoratedChordDiagram& c) {
  const std::size_t n = c.endpoint_count();
  std::vector<Symbol> s(n);
  for (std::size_t p = 0; p < n; ++p) s[p] = {(c.partner(p) + n - p) % n, c.decoration_at(p)};
  return s;
}

// Booth's least-rotation algorithm over an arbitrary totally ordered alphabet.
template <typename T>
std::size_t booth(const std::vector<T>& s) {
  const long n = static_cast<long>(s.size());
  if (n == 0) return 0;
  auto at = [&](long i) -> const T& { return s[static_cast<std::size_t>(i % n)]; };
  std::vector<long> f(static_cast<std::size_t>(2 * n), -1);
  long k = 0;
  for (long j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    long i = f[static_cast<std::size_t>(j - k - 1)];
    while (i != -1 && !(sj == at(k + i + 1))) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (!(sj == at(k + i + 1))) {  // i == -1 here
      if (sj < at(k)) k = j;
      f[static_cast<std::size_t>(j - k)] = -1;
    } else {
      f[static_cast<std::size_t>(j - k)] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

void put_uleb(std::vector<std::uint8_t>& out, std::uint64_t v) {
  do {
    std::uint8_t byte = v & 0x7F;
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(byte);
  } while (v != 0);
}

}  // namespace

DecoratedChordDiagram::DecoratedChordDiagram(std::size_t endpoint_count, std::vector<Chord> chords) {
  if (endpoint_count != 2 * chords.size()) {
    throw ValidationError("chord diagram with " + std::to_string(chords.size()) + " chords needs " +
                          std::to_string(2 * chords.size()) + " endpoints, got " + std::to_string(endpoint_count));
  }
  const std::size_t none = endpoint_count;
  partner_.assign(endpoint_count, none);
  decoration_.assign(endpoint_count, 0);
  for (const Chord& ch : chords) {
    if (ch.a >= endpoint_count || ch.b >= endpoint_count || ch.a == ch.b) {
      throw ValidationError("chord endpoint out of range or degenerate");
    }
    if (partner_[ch.a] != none || partner_[ch.b] != none) {
      throw ValidationError("endpoint used by two chords");
    }
    partner_[ch.a] = ch.b;
    partner_[ch.b] = ch.a;
    decoration_[ch.a] = decoration_[ch.b] = ch.decoration;
  }
}

std::vector<DecoratedChordDiagram::Chord> DecoratedChordDiagram::chords() const {
  std::vector<Chord> out;
  for (std::size_t p = 0; p < partner_.size(); ++p) {
    if (p < partner_[p]) out.push_back({p, partner_[p], decoration_[p]});
  }
  return out;
}

DecoratedChordDiagram DecoratedChordDiagram::rotated(std::size_t k) const {
  const std::size_t n = endpoint_count();
  if (n == 0) return *this;
  std::vector<Chord> out;
  for (const Chord& ch : chords()) {
    std::size_t a = (ch.a + n - k % n) % n;
    std::size_t b = (ch.b + n - k % n) % n;
    if (a > b) std::swap(a, b);
    out.push_back({a, b, ch.decoration});
  }
  return DecoratedChordDiagram(n, std::move(out));
}

bool DecoratedChordDiagram::interleaved(std::size_t p, std::size_t q) const {
  std::size_t a = p, b = partner_[p];
  if (a > b) std::swap(a, b);
  const std::size_t c = q, d = partner_[q];
  if (a == c || a == d || b == c || b == d) return false;
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

std::size_t least_rotation(const DecoratedChordDiagram& c) { return booth(symbols(c)); }

std::vector<std::uint8_t> canonical_form(const DecoratedChordDiagram& c) {
  const std::vector<Symbol> s = symbols(c);
  const std::size_t k = booth(s);
  std::vector<std::uint8_t> out;
  put_uleb(out, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& [offset, deco] = s[(k + i) % s.size()];
    put_uleb(out, offset);
    const auto u = static_cast<std::uint64_t>(deco);
    put_uleb(out, (u << 1) ^ static_cast<std::uint64_t>(deco >> 63));
  }
  return out;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0xF];
  }
  return out;
}

bool evenness_check(const DecoratedChordDiagram& c) {
  for (std::size_t p = 0; p < c.endpoint_count(); ++p) {
    if (p > c.partner(p)) continue;
    std::size_t crossings = 0;
    for (std::size_t q = p + 1; q < c.partner(p); ++q) {
      const std::size_t r = c.partner(q);
      if (r < p || r > c.partner(p)) ++crossings;
    }
    if (crossings % 2 != 0) return false;
  }
  return true;
}

DecoratedChordDiagram underlying_chord_diagram(const PseudoGaussDiagram& g) {
  std::vector<DecoratedChordDiagram::Chord> chords;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (p < g.partner(p)) chords.push_back({p, g.partner(p), 0});
  }
  return DecoratedChordDiagram(g.size(), std::move(chords));
}

}  // namespace pk
