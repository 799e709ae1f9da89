#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pk {

enum class VertexKind { classical, precrossing };

// One 4-valent vertex of a planar-diagram code. `edges` are listed
// counterclockwise. For a classical vertex edges[0] is the incoming
// under-strand edge and `sign` is the crossing sign (+1/-1). For a
// precrossing edges[0] is the incoming edge of "strand one" and sign is 0.
struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::precrossing;
  int sign = 0;
  std::array<int, 4> edges{};

  bool is_precrossing() const { return kind == VertexKind::precrossing; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A (possibly partially) resolved knot pseudodiagram in PD form.
//
// Construction validates every invariant: each edge label occurs exactly
// twice, strand traversal (enter slot k, leave slot k+2) gives one closed
// component, slot 0 of every vertex is entered by that traversal, classical
// signs agree with strand orientation, and vertex ids are unique. Edge
// labels are then renumbered 1..2n in traversal order, starting from the
// edge that carried the smallest label, and each precrossing is rotated so
// that slot 0 is its incoming edge with the smaller label. An empty vertex
// list is the crossingless loop.
class PseudoPD {
 public:
  PseudoPD() = default;
  explicit PseudoPD(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::size_t precrossing_count() const;
  std::size_t classical_count() const { return size() - precrossing_count(); }
  bool is_shadow() const { return precrossing_count() == size(); }
  bool is_resolved() const { return precrossing_count() == 0; }

  // Ids of precrossings in ascending order; resolution choice vectors are
  // indexed by this order.
  std::vector<int> precrossing_ids() const;

  std::size_t index_of(int id) const;  // throws ValidationError if absent
  const Vertex& vertex(int id) const { return vertices_[index_of(id)]; }

  // "X+(1,4,2,5) P(...)": the PD text grammar; vertex ids are positional,
  // so the text only round-trips when ids are 1..n in vertex order.
  std::string to_string() const;

  friend bool operator==(const PseudoPD&, const PseudoPD&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// A PD code with no precrossings.
class ResolvedPD {
 public:
  ResolvedPD() = default;
  explicit ResolvedPD(PseudoPD pd);  // throws ValidationError on precrossings

  const PseudoPD& pd() const { return pd_; }
  const std::vector<Vertex>& vertices() const { return pd_.vertices(); }
  std::size_t size() const { return pd_.size(); }

  friend bool operator==(const ResolvedPD&, const ResolvedPD&) = default;

 private:
  PseudoPD pd_;
};

// One pass of the strand through a vertex: the vertex index and the slot
// through which it is entered.
struct Pass {
  std::size_t vertex = 0;
  int slot = 0;
  friend bool operator==(const Pass&, const Pass&) = default;
};

// The 2n passes in traversal order, starting with the edge labelled 1.
std::vector<Pass> traverse(const PseudoPD& d);

PseudoPD parse_pd(std::string_view text);

// choice[i] in {+1,-1} resolves the i-th precrossing (ascending id) to a
// classical crossing of that sign.
ResolvedPD resolve(const PseudoPD& d, std::span<const int> choice);

// Resolution encoded as a bit mask over precrossings in ascending id
// order: bit i set means sign +1.
ResolvedPD resolve_mask(const PseudoPD& d, unsigned long long mask);

int writhe(const ResolvedPD& d);

// Over/under exchange at every classical crossing; precrossings unchanged.
PseudoPD mirror(const PseudoPD& d);
ResolvedPD mirror(const ResolvedPD& d);

// Euler-characteristic test: a connected 4-valent diagram with n > 0
// vertices is planar iff it has n + 2 faces.
bool is_planar(const PseudoPD& d);
std::size_t face_count(const PseudoPD& d);

// Equality after renumbering edges along the traversal from any start.
bool same_up_to_edge_relabeling(const PseudoPD& a, const PseudoPD& b);

// Low-level builder used by rewrites: accepts vertices whose precrossings
// may have slot 0 outgoing, orients the knot so that vertex `anchor` keeps
// its slot-0 edge as incoming, rotates precrossings to match, then
// validates through the normal constructor.
PseudoPD build_oriented(std::vector<Vertex> vertices, std::size_t anchor);

}  // namespace pk
