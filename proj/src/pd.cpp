#include "pseudoknot/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

// Half-edge index 4 * vertex + slot.
using HalfEdge = std::size_t;

std::vector<HalfEdge> partner_map(const std::vector<Vertex>& vs) {
  std::map<int, std::vector<HalfEdge>> occ;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    for (int s = 0; s < 4; ++s) {
      const int label = vs[v].edges[static_cast<std::size_t>(s)];
      if (label < 0) throw ValidationError("negative edge label " + std::to_string(label));
      occ[label].push_back(4 * v + static_cast<std::size_t>(s));
    }
  }
  std::vector<HalfEdge> partner(4 * vs.size());
  for (const auto& [label, where] : occ) {
    if (where.size() != 2) {
      throw ValidationError("edge label " + std::to_string(label) + " appears " + std::to_string(where.size()) +
                            " times (expected 2)");
    }
    partner[where[0]] = where[1];
    partner[where[1]] = where[0];
  }
  return partner;
}

// Follows the strand entering (vertex, slot) until it closes.
std::vector<Pass> walk(const std::vector<HalfEdge>& partner, std::size_t vertex, int slot) {
  std::vector<Pass> passes;
  const HalfEdge start = 4 * vertex + static_cast<std::size_t>(slot);
  HalfEdge cur = start;
  do {
    passes.push_back({cur / 4, static_cast<int>(cur % 4)});
    const HalfEdge out = 4 * (cur / 4) + (cur % 4 + 2) % 4;
    cur = partner[out];
    if (passes.size() > partner.size()) throw InternalError("strand walk did not close");
  } while (cur != start);
  return passes;
}

// For each vertex, the slot (1 or 3) through which the second strand enters.
std::vector<int> second_entries(std::size_t n, const std::vector<Pass>& passes) {
  std::vector<int> entry(n, -1);
  for (const Pass& p : passes) {
    if (p.slot % 2 == 1) entry[p.vertex] = p.slot;
  }
  return entry;
}

template <std::size_t N>
std::array<int, N> rotate_left(const std::array<int, N>& a, std::size_t k) {
  std::array<int, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[(i + k) % N];
  return r;
}

// Renumbers edges 1..2n along `passes` starting at passes[start] and
// rotates precrossings so slot 0 is the smaller incoming label.
std::vector<Vertex> relabel(std::vector<Vertex> vs, const std::vector<Pass>& passes, std::size_t start) {
  const std::size_t m = passes.size();
  std::vector<std::array<int, 4>> fresh(vs.size());
  for (std::size_t j = 0; j < m; ++j) {
    const Pass& in = passes[(start + j) % m];
    const Pass& prev = passes[(start + j + m - 1) % m];
    const int label = static_cast<int>(j) + 1;
    fresh[in.vertex][static_cast<std::size_t>(in.slot)] = label;
    fresh[prev.vertex][static_cast<std::size_t>((prev.slot + 2) % 4)] = label;
  }
  const std::vector<int> second = second_entries(vs.size(), passes);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    vs[v].edges = fresh[v];
    if (vs[v].is_precrossing()) {
      const auto s2 = static_cast<std::size_t>(second[v]);
      if (vs[v].edges[s2] < vs[v].edges[0]) vs[v].edges = rotate_left(vs[v].edges, s2);
    }
  }
  return vs;
}

struct Checked {
  std::vector<HalfEdge> partner;
  std::vector<Pass> passes;  // from vertex 0, slot 0
};

Checked check_structure(const std::vector<Vertex>& vs) {
  std::set<int> ids;
  for (const Vertex& v : vs) {
    if (!ids.insert(v.id).second) throw ValidationError("duplicate vertex id " + std::to_string(v.id));
    if (v.is_precrossing() && v.sign != 0) {
      throw ValidationError("precrossing " + std::to_string(v.id) + " carries a sign");
    }
    if (!v.is_precrossing() && v.sign != 1 && v.sign != -1) {
      throw ValidationError("classical crossing " + std::to_string(v.id) + " needs sign +1 or -1");
    }
  }
  Checked c;
  c.partner = partner_map(vs);
  if (vs.empty()) return c;
  c.passes = walk(c.partner, 0, 0);
  if (c.passes.size() != 2 * vs.size()) {
    throw ValidationError("diagram has more than one component (strand from vertex " + std::to_string(vs[0].id) +
                          " closes after " + std::to_string(c.passes.size()) + " of " +
                          std::to_string(2 * vs.size()) + " passes)");
  }
  return c;
}

}  // namespace

PseudoPD::PseudoPD(std::vector<Vertex> vertices) {
  Checked c = check_structure(vertices);
  if (vertices.empty()) return;

  std::vector<bool> slot0_entered(vertices.size(), false);
  for (const Pass& p : c.passes) {
    if (p.slot == 0) slot0_entered[p.vertex] = true;
  }
  const std::vector<int> second = second_entries(vertices.size(), c.passes);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!slot0_entered[v]) {
      throw ValidationError("vertex " + std::to_string(vertices[v].id) +
                            ": first edge is not incoming under the strand orientation");
    }
    if (!vertices[v].is_precrossing()) {
      const int sign = second[v] == 3 ? 1 : -1;
      if (sign != vertices[v].sign) {
        throw ValidationError("crossing " + std::to_string(vertices[v].id) + " has sign " +
                              std::to_string(vertices[v].sign) + " but orientation gives " + std::to_string(sign));
      }
    }
  }

  std::size_t start = 0;
  for (std::size_t j = 1; j < c.passes.size(); ++j) {
    const Pass& a = c.passes[j];
    const Pass& b = c.passes[start];
    if (vertices[a.vertex].edges[static_cast<std::size_t>(a.slot)] <
        vertices[b.vertex].edges[static_cast<std::size_t>(b.slot)]) {
      start = j;
    }
  }
  vertices_ = relabel(std::move(vertices), c.passes, start);
}

std::size_t PseudoPD::precrossing_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.is_precrossing(); }));
}

std::vector<int> PseudoPD::precrossing_ids() const {
  std::vector<int> ids;
  for (const Vertex& v : vertices_) {
    if (v.is_precrossing()) ids.push_back(v.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t PseudoPD::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw ValidationError("no vertex with id " + std::to_string(id));
}

std::string PseudoPD::to_string() const {
  std::string out;
  for (const Vertex& v : vertices_) {
    if (!out.empty()) out += ' ';
    out += v.is_precrossing() ? "P" : (v.sign > 0 ? "X+" : "X-");
    out += '(';
    for (std::size_t s = 0; s < 4; ++s) {
      if (s) out += ',';
      out += std::to_string(v.edges[s]);
    }
    out += ')';
  }
  return out;
}

ResolvedPD::ResolvedPD(PseudoPD pd) : pd_(std::move(pd)) {
  if (!pd_.is_resolved()) throw ValidationError("diagram still has precrossings");
}

std::vector<Pass> traverse(const PseudoPD& d) {
  if (d.empty()) return {};
  std::vector<Pass> passes = walk(partner_map(d.vertices()), 0, 0);
  auto first = std::find_if(passes.begin(), passes.end(), [&](const Pass& p) {
    return d.vertices()[p.vertex].edges[static_cast<std::size_t>(p.slot)] == 1;
  });
  std::rotate(passes.begin(), first, passes.end());
  return passes;
}

PseudoPD parse_pd(std::string_view text) {
  std::vector<Vertex> vs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (i >= text.size() || text[i] != ch) {
      throw ParseError(std::string("expected '") + ch + "'", i);
    }
    ++i;
  };
  // Accepts '-' and the UTF-8 minus sign U+2212.
  auto read_sign = [&]() -> int {
    if (i < text.size() && text[i] == '+') {
      ++i;
      return 1;
    }
    if (i < text.size() && text[i] == '-') {
      ++i;
      return -1;
    }
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      i += 3;
      return -1;
    }
    throw ParseError("expected crossing sign '+' or '-'", i);
  };
  auto read_int = [&]() -> int {
    skip_ws();
    const std::size_t begin = i;
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000'000) throw ParseError("edge label too large", begin);
      ++i;
    }
    if (i == begin) throw ParseError("expected edge label", i);
    return static_cast<int>(value);
  };

  skip_ws();
  while (i < text.size()) {
    const std::size_t term_start = i;
    Vertex v;
    v.id = static_cast<int>(vs.size()) + 1;
    if (text[i] == 'X') {
      ++i;
      v.kind = VertexKind::classical;
      v.sign = read_sign();
    } else if (text[i] == 'P') {
      ++i;
      v.kind = VertexKind::precrossing;
    } else {
      throw ParseError("expected term 'X+(', 'X-(' or 'P('", term_start);
    }
    expect('(');
    for (std::size_t s = 0; s < 4; ++s) {
      if (s) expect(',');
      v.edges[s] = read_int();
    }
    expect(')');
    vs.push_back(v);
    skip_ws();
  }
  return PseudoPD(std::move(vs));
}

ResolvedPD resolve(const PseudoPD& d, std::span<const int> choice) {
  const std::vector<int> ids = d.precrossing_ids();
  if (choice.size() != ids.size()) {
    throw ValidationError("choice has " + std::to_string(choice.size()) + " entries but diagram has " +
                          std::to_string(ids.size()) + " precrossings");
  }
  std::map<int, int> by_id;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (choice[i] != 1 && choice[i] != -1) throw ValidationError("choice entries must be +1 or -1");
    by_id[ids[i]] = choice[i];
  }
  if (d.empty()) return ResolvedPD(d);

  const std::vector<int> second = second_entries(d.size(), walk(partner_map(d.vertices()), 0, 0));
  std::vector<Vertex> out = d.vertices();
  for (std::size_t v = 0; v < out.size(); ++v) {
    Vertex& x = out[v];
    if (!x.is_precrossing()) continue;
    const int sign = by_id.at(x.id);
    const bool two_from_d = second[v] == 3;
    // Positive sign needs strand two over when it runs d->b, strand one
    // over when it runs b->d; the incoming under edge goes to slot 0.
    const bool strand_one_under = (sign > 0) == two_from_d;
    if (!strand_one_under) x.edges = rotate_left(x.edges, two_from_d ? 3 : 1);
    x.kind = VertexKind::classical;
    x.sign = sign;
  }
  return ResolvedPD(PseudoPD(std::move(out)));
}

ResolvedPD resolve_mask(const PseudoPD& d, unsigned long long mask) {
  const std::size_t k = d.precrossing_count();
  std::vector<int> choice(k);
  for (std::size_t i = 0; i < k; ++i) choice[i] = (mask >> i) & 1ULL ? 1 : -1;
  return resolve(d, choice);
}

int writhe(const ResolvedPD& d) {
  int w = 0;
  for (const Vertex& v : d.vertices()) w += v.sign;
  return w;
}

PseudoPD mirror(const PseudoPD& d) {
  std::vector<Vertex> out = d.vertices();
  for (Vertex& v : out) {
    if (v.is_precrossing()) continue;
    // New under strand is the old over strand; its incoming edge sits in
    // slot 3 (positive) or slot 1 (negative).
    v.edges = rotate_left(v.edges, v.sign > 0 ? 3 : 1);
    v.sign = -v.sign;
  }
  return PseudoPD(std::move(out));
}

ResolvedPD mirror(const ResolvedPD& d) { return ResolvedPD(mirror(d.pd())); }

std::size_t face_count(const PseudoPD& d) {
  if (d.empty()) return 2;
  const std::vector<HalfEdge> partner = partner_map(d.vertices());
  std::vector<bool> seen(partner.size(), false);
  std::size_t faces = 0;
  for (HalfEdge h = 0; h < partner.size(); ++h) {
    if (seen[h]) continue;
    ++faces;
    HalfEdge cur = h;
    while (!seen[cur]) {
      seen[cur] = true;
      const HalfEdge across = partner[cur];
      cur = 4 * (across / 4) + (across % 4 + 1) % 4;
    }
  }
  return faces;
}

bool is_planar(const PseudoPD& d) { return d.empty() || face_count(d) == d.size() + 2; }

bool same_up_to_edge_relabeling(const PseudoPD& a, const PseudoPD& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto by_id = [](std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end(), [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
    return vs;
  };
  const std::vector<Vertex> target = by_id(a.vertices());
  const std::vector<Pass> passes = walk(partner_map(b.vertices()), 0, 0);
  for (std::size_t start = 0; start < passes.size(); ++start) {
    if (by_id(relabel(b.vertices(), passes, start)) == target) return true;
  }
  return false;
}

PseudoPD build_oriented(std::vector<Vertex> vertices, std::size_t anchor) {
  if (vertices.empty()) return PseudoPD();
  const std::vector<HalfEdge> partner = partner_map(vertices);
  const std::vector<Pass> passes = walk(partner, anchor, 0);
  if (passes.size() != 2 * vertices.size()) throw ValidationError("diagram has more than one component");
  std::vector<bool> slot0_entered(vertices.size(), false);
  for (const Pass& p : passes) {
    if (p.slot == 0) slot0_entered[p.vertex] = true;
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (slot0_entered[v]) continue;
    if (!vertices[v].is_precrossing()) {
      throw ValidationError("classical crossing " + std::to_string(vertices[v].id) + " is against the orientation");
    }
    vertices[v].edges = rotate_left(vertices[v].edges, 2);
  }
  return PseudoPD(std::move(vertices));
}

}  // namespace pk
