#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoknot/pd.hpp"

namespace pk {

// One endpoint of a Gauss-diagram chord. Every chord is an arrow from its
// tail to its head: for a classical crossing the tail is the over-strand
// passage ("O") and the head the under-strand passage ("U"); for a
// precrossing the arrow is the one the crossing would carry if resolved
// with sign +1 ("Pt" tail, "Ph" head).
struct GaussToken {
  int id = 0;
  bool precrossing = false;
  bool head = false;
  int sign = 0;  // +1/-1 for classical, 0 for precrossings

  friend bool operator==(const GaussToken&, const GaussToken&) = default;
};

// Cyclic sequence of 2n tokens in traversal order (the core circle runs
// counterclockwise). Construction checks that every id occurs exactly
// twice, once as head and once as tail, and that both tokens of an id
// agree on kind and sign. Diagrams need not be planar.
class PseudoGaussDiagram {
 public:
  PseudoGaussDiagram() = default;
  explicit PseudoGaussDiagram(std::vector<GaussToken> tokens);

  const std::vector<GaussToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  std::size_t crossing_count() const { return tokens_.size() / 2; }
  bool empty() const { return tokens_.empty(); }

  // Position of the partner token.
  std::size_t partner(std::size_t position) const { return partner_[position]; }

  std::vector<int> ids() const;              // ascending
  std::vector<int> precrossing_ids() const;  // ascending
  bool all_classical() const;

  // Comma-separated extended Gauss code, e.g. "O1+,U2+,Ph3,Pt3".
  std::string to_string() const;

  friend bool operator==(const PseudoGaussDiagram& a, const PseudoGaussDiagram& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<GaussToken> tokens_;
  std::vector<std::size_t> partner_;
};

PseudoGaussDiagram parse_gauss(std::string_view text);

// Tokens follow the traversal starting at edge 1 of the PD code.
PseudoGaussDiagram pd_to_gauss(const PseudoPD& d);

// Local reconstruction of a PD code from the signed Gauss code (edge i+1
// enters token i). Non-planar codes give virtual diagrams; the
// PD layer and the bracket state sum accept those.
PseudoPD gauss_to_pd(const PseudoGaussDiagram& g);

// choice indexed by precrossing id ascending: +1 keeps the arrow and
// assigns sign +1, -1 reverses the arrow and assigns sign -1.
PseudoGaussDiagram resolve_gauss(const PseudoGaussDiagram& g, std::span<const int> choice);

// Same diagram with the token sequence rotated left by k.
PseudoGaussDiagram rotated(const PseudoGaussDiagram& g, std::size_t k);

// Equal up to cyclic rotation and a bijective renaming of ids.
bool same_up_to_rotation_and_ids(const PseudoGaussDiagram& a, const PseudoGaussDiagram& b);

}  // namespace pk
