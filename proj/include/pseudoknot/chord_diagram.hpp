#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudoknot/gauss.hpp"

namespace pk {

// An element of the set of integer-decorated chord diagrams: 2m endpoint
// positions on an oriented circle, a perfect matching on them, and one
// integer per chord.
class DecoratedChordDiagram {
 public:
  struct Chord {
    std::size_t a = 0;  // a < b
    std::size_t b = 0;
    std::int64_t decoration = 0;
    friend bool operator==(const Chord&, const Chord&) = default;
  };

  DecoratedChordDiagram() = default;

  // Throws ValidationError unless the chords form a perfect matching on
  // positions 0..endpoint_count-1.
  DecoratedChordDiagram(std::size_t endpoint_count, std::vector<Chord> chords);

  std::size_t endpoint_count() const { return partner_.size(); }
  std::size_t chord_count() const { return partner_.size() / 2; }
  bool empty() const { return partner_.empty(); }

  std::size_t partner(std::size_t position) const { return partner_[position]; }
  std::int64_t decoration_at(std::size_t position) const { return decoration_[position]; }

  // Chords sorted by first endpoint.
  std::vector<Chord> chords() const;

  // Position p moves to (p + endpoint_count - k) mod endpoint_count.
  DecoratedChordDiagram rotated(std::size_t k) const;

  // Whether chords through positions p and q cross.
  bool interleaved(std::size_t p, std::size_t q) const;

  friend bool operator==(const DecoratedChordDiagram&, const DecoratedChordDiagram&) = default;

 private:
  std::vector<std::size_t> partner_;
  std::vector<std::int64_t> decoration_;
};

// Least rotation of the per-endpoint sequence (counterclockwise partner
// offset, decoration), serialized as LEB128 offsets and zigzag-LEB128
// decorations after a LEB128 endpoint count. Equal exactly for rotations
// of each other; reflections are not identified.
std::vector<std::uint8_t> canonical_form(const DecoratedChordDiagram& c);
std::string to_hex(const std::vector<std::uint8_t>& bytes);

// Smallest k with c.rotated(k) lexicographically least (Booth).
std::size_t least_rotation(const DecoratedChordDiagram& c);

// Every chord crosses an even number of chords.
bool evenness_check(const DecoratedChordDiagram& c);

// Underlying chord diagram of a Gauss diagram: every chord, arrows and
// signs dropped, decoration 0.
DecoratedChordDiagram underlying_chord_diagram(const PseudoGaussDiagram& g);

}  // namespace pk
