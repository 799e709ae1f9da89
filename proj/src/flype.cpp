#include "pseudoknot/flype.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pseudoknot/error.hpp"
#include "pseudoknot/gauss.hpp"

namespace pk {
namespace {

struct Slot {
  std::size_t v = 0;
  int s = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

class Incidence {
 public:
  explicit Incidence(const std::vector<Vertex>& vs) : vs_(vs) {
    for (std::size_t v = 0; v < vs.size(); ++v) {
      for (int s = 0; s < 4; ++s) occ_[vs[v].edges[s]].push_back({v, s});
    }
  }
  // The other end of the edge at `self`.
  Slot other(Slot self) const {
    for (const Slot& p : occ_.at(vs_[self.v].edges[self.s])) {
      if (!(p == self)) return p;
    }
    return self;
  }

 private:
  const std::vector<Vertex>& vs_;
  std::map<int, std::vector<Slot>> occ_;
};

int max_label(const std::vector<Vertex>& vs) {
  int m = 0;
  for (const Vertex& v : vs) {
    for (int e : v.edges) m = std::max(m, e);
  }
  return m;
}

bool connected(const std::vector<Vertex>& vs, const Incidence& inc, const std::vector<bool>& in_t) {
  std::vector<std::size_t> stack;
  std::vector<bool> seen(vs.size(), false);
  std::size_t total = 0;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (!in_t[v]) continue;
    ++total;
    if (stack.empty() && !seen[v]) {
      stack.push_back(v);
      seen[v] = true;
    }
  }
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (int s = 0; s < 4; ++s) {
      const std::size_t w = inc.other({v, s}).v;
      if (in_t[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

// Boundary half-edges of T met walking counterclockwise from `start`.
std::vector<Slot> boundary_rotation(const std::vector<Vertex>& vs, const Incidence& inc,
                                    const std::vector<bool>& in_t, Slot start) {
  std::vector<Slot> order{start};
  Slot cur = start;
  for (std::size_t guard = 0; guard < 16 * vs.size() + 16; ++guard) {
    cur.s = (cur.s + 1) % 4;
    const Slot o = inc.other(cur);
    if (in_t[o.v] && !(o == cur)) {
      cur = o;
      continue;
    }
    if (cur == start) return order;
    order.push_back(cur);
  }
  throw InternalError("tangle boundary walk did not close");
}

struct Legs {
  std::array<int, 4> slot{};
  std::array<Slot, 4> end{};
};

Legs legs_of(const Incidence& inc, std::size_t v, int k) {
  Legs l;
  for (int i = 0; i < 4; ++i) {
    l.slot[i] = (k + i) % 4;
    l.end[i] = inc.other({v, l.slot[i]});
  }
  return l;
}

// Outcome of checking a site; `error` is empty when valid.
struct SiteCheck {
  std::string error;
  FlypeSite site;
  std::vector<Slot> boundary;
  Legs legs;
};

SiteCheck check_site(const PseudoPD& d, int crossing, std::vector<int> tangle) {
  SiteCheck r;
  std::sort(tangle.begin(), tangle.end());
  tangle.erase(std::unique(tangle.begin(), tangle.end()), tangle.end());
  r.site.crossing = crossing;
  r.site.tangle = tangle;
  const std::vector<Vertex>& vs = d.vertices();
  const std::size_t v = d.index_of(crossing);
  if (!vs[v].is_precrossing()) {
    r.error = "flype crossing " + std::to_string(crossing) + " is classical";
    return r;
  }
  std::vector<bool> in_t(vs.size(), false);
  for (int id : tangle) {
    if (id == crossing) {
      r.error = "tangle contains the flype crossing";
      return r;
    }
    const std::size_t w = d.index_of(id);
    if (!vs[w].is_precrossing()) {
      r.error = "tangle contains classical crossing " + std::to_string(id);
      return r;
    }
    in_t[w] = true;
  }
  if (tangle.empty()) return r;

  const Incidence inc(vs);
  if (!connected(vs, inc, in_t)) {
    r.error = "tangle is not connected";
    return r;
  }
  std::size_t boundary = 0;
  for (std::size_t w = 0; w < vs.size(); ++w) {
    if (!in_t[w]) continue;
    for (int s = 0; s < 4; ++s) {
      if (!in_t[inc.other({w, s}).v]) ++boundary;
    }
  }
  if (boundary != 4) {
    r.error = "tangle has " + std::to_string(boundary) + " boundary edges, not 4";
    return r;
  }
  for (int k = 0; k < 4; ++k) {
    const Legs l = legs_of(inc, v, k);
    const bool ok = in_t[l.end[2].v] && in_t[l.end[3].v] && !in_t[l.end[0].v] && !in_t[l.end[1].v] &&
                    l.end[0].v != v && l.end[1].v != v;
    if (!ok) continue;
    const std::vector<Slot> bd = boundary_rotation(vs, inc, in_t, l.end[3]);
    if (bd.size() != 4 || !(bd[1] == l.end[2])) {
      r.error = "legs of the flype crossing are not consecutive on the tangle boundary";
      return r;
    }
    r.site.first_leg_slot = k;
    r.site.boundary = {vs[bd[0].v].edges[bd[0].s], vs[bd[1].v].edges[bd[1].s], vs[bd[2].v].edges[bd[2].s],
                       vs[bd[3].v].edges[bd[3].s]};
    r.boundary = bd;
    r.legs = l;
    return r;
  }
  r.error = "flype crossing does not have two adjacent legs into the tangle";
  return r;
}

}  // namespace

FlypeSite make_flype_site(const PseudoPD& d, int crossing, std::vector<int> tangle) {
  SiteCheck r = check_site(d, crossing, std::move(tangle));
  if (!r.error.empty()) throw ValidationError("not a flype site: " + r.error);
  return r.site;
}

std::vector<FlypeSite> enumerate_flype_sites(const PseudoPD& d) {
  const std::size_t n = d.size();
  if (n > 24) throw ValidationError("flype site enumeration is limited to 24 vertices");
  std::vector<FlypeSite> out;
  std::vector<int> ids;
  for (const Vertex& v : d.vertices()) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  for (int crossing : ids) {
    if (!d.vertex(crossing).is_precrossing()) continue;
    std::vector<int> rest;
    for (int id : ids) {
      if (id != crossing) rest.push_back(id);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      std::vector<int> t;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if ((mask >> i) & 1) t.push_back(rest[i]);
      }
      SiteCheck r = check_site(d, crossing, t);
      if (r.error.empty()) out.push_back(r.site);
    }
  }
  return out;
}

PseudoPD shadow_flype_pd(const PseudoPD& d, const FlypeSite& site) {
  SiteCheck r = check_site(d, site.crossing, site.tangle);
  if (!r.error.empty()) throw ValidationError("not a flype site: " + r.error);
  if (r.site != site) throw ValidationError("flype site boundary does not match the diagram");
  if (site.tangle.empty()) return d;

  std::vector<Vertex> vs = d.vertices();
  const std::size_t v = d.index_of(site.crossing);
  const Legs& l = r.legs;
  std::array<int, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = vs[v].edges[l.slot[i]];
  const Slot g2h = r.boundary[2], g1h = r.boundary[3];
  const int alpha = max_label(vs) + 1, beta = alpha + 1;
  const int g2 = vs[g2h.v].edges[g2h.s], g1 = vs[g1h.v].edges[g1h.s];

  // The outside legs of v now run straight into the tangle; its far legs
  // run into the relocated crossing.
  vs[l.end[2].v].edges[l.end[2].s] = p[0];
  vs[l.end[3].v].edges[l.end[3].s] = p[1];
  vs[g2h.v].edges[g2h.s] = alpha;
  vs[g1h.v].edges[g1h.s] = beta;
  for (int id : site.tangle) {
    auto& e = vs[d.index_of(id)].edges;
    e = {e[0], e[3], e[2], e[1]};
  }
  vs[v].edges = {alpha, beta, g2, g1};
  const std::size_t anchor = v == 0 ? 1 : 0;
  return build_oriented(std::move(vs), anchor);
}

namespace {

bool in_arc(const Arc& x, std::size_t p, std::size_t m) { return (p + m - x.start) % m < x.length; }
std::size_t arc_last(const Arc& x, std::size_t m) { return (x.start + x.length - 1) % m; }
bool precedes(std::size_t e, const Arc& x, std::size_t m) { return x.length > 0 && (e + 1) % m == x.start; }
bool follows(std::size_t e, const Arc& x, std::size_t m) {
  return x.length > 0 && e == (x.start + x.length) % m;
}

// Where an endpoint is reinserted: right before or right after old position q.
struct Target {
  std::size_t q = 0;
  bool after = false;
};

}  // namespace

DecoratedChordDiagram chord_flype(const DecoratedChordDiagram& c, const ChordFlypeSite& s) {
  const std::size_t m = c.endpoint_count();
  if (s.chord >= m) throw ValidationError("flype chord position out of range");
  const std::size_t e1 = s.chord, e2 = c.partner(e1);
  const Arc& a = s.a;
  const Arc& b = s.b;
  if (a.start >= m || b.start >= m || a.length + b.length + 2 > m) throw ValidationError("flype arcs out of range");
  for (std::size_t p = 0; p < m; ++p) {
    const bool ia = in_arc(a, p, m), ib = in_arc(b, p, m);
    if (ia && ib) throw ValidationError("flype arcs overlap");
    if ((ia || ib) && (p == e1 || p == e2)) throw ValidationError("flype arc contains the flype chord");
    if ((ia || ib) && !in_arc(a, c.partner(p), m) && !in_arc(b, c.partner(p), m)) {
      throw ValidationError("a chord leaves the flype arcs");
    }
  }

  std::vector<std::pair<std::size_t, Target>> moves;
  auto jump = [&](std::size_t e, const Arc& x) -> Target {
    if (precedes(e, x, m)) return {arc_last(x, m), true};
    return {x.start, false};
  };
  if (s.type == FlypeType::II) {
    if (a.length == 0 || b.length == 0) throw ValidationError("type II flype needs two nonempty arcs");
    std::size_t before = m, after = m;
    for (std::size_t e : {e1, e2}) {
      if (precedes(e, a, m)) before = e;
      else if (follows(e, a, m)) after = e;
    }
    if (before == m || after == m) throw ValidationError("flype chord does not wrap the first arc");
    moves.push_back({before, {b.start, false}});
    moves.push_back({after, {arc_last(b, m), true}});
  } else {
    auto adjacent = [&](std::size_t e, const Arc& x) {
      return x.length == 0 || precedes(e, x, m) || follows(e, x, m);
    };
    std::pair<const Arc*, const Arc*> assign{nullptr, nullptr};
    if (adjacent(e1, a) && adjacent(e2, b)) {
      assign = {&a, &b};
    } else if (adjacent(e1, b) && adjacent(e2, a)) {
      assign = {&b, &a};
    } else {
      throw ValidationError("flype chord endpoints are not at the ends of distinct arcs");
    }
    if (assign.first->length > 0) moves.push_back({e1, jump(e1, *assign.first)});
    if (assign.second->length > 0) moves.push_back({e2, jump(e2, *assign.second)});
  }

  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < m; ++p) {
    bool moving = false;
    for (const auto& mv : moves) moving = moving || mv.first == p;
    if (!moving) order.push_back(p);
  }
  for (const auto& [e, t] : moves) {
    auto it = std::find(order.begin(), order.end(), t.q);
    if (it == order.end()) throw InternalError("flype target vanished");
    order.insert(t.after ? it + 1 : it, e);
  }
  std::vector<std::size_t> where(m);
  for (std::size_t i = 0; i < m; ++i) where[order[i]] = i;
  std::vector<DecoratedChordDiagram::Chord> chords;
  for (const auto& ch : c.chords()) {
    std::size_t x = where[ch.a], y = where[ch.b];
    if (x > y) std::swap(x, y);
    chords.push_back({x, y, ch.decoration});
  }
  return DecoratedChordDiagram(m, std::move(chords));
}

ChordFlypeSite chord_site_for(const PseudoPD& d, const FlypeSite& site) {
  make_flype_site(d, site.crossing, site.tangle);
  const PseudoGaussDiagram g = pd_to_gauss(d);
  const std::size_t m = g.size();
  const std::set<int> t(site.tangle.begin(), site.tangle.end());
  auto in_t = [&](std::size_t p) { return t.count(g.tokens()[p].id) > 0; };
  std::vector<std::size_t> v_pos;
  for (std::size_t p = 0; p < m; ++p) {
    if (g.tokens()[p].id == site.crossing) v_pos.push_back(p);
  }
  ChordFlypeSite r;
  r.chord = v_pos.at(0);
  if (t.empty()) return r;

  std::vector<Arc> runs;
  for (std::size_t p = 0; p < m; ++p) {
    if (!in_t(p) || in_t((p + m - 1) % m)) continue;
    Arc x{p, 0};
    while (x.length < m && in_t((p + x.length) % m)) ++x.length;
    runs.push_back(x);
  }
  if (runs.size() != 2) throw InternalError("tangle does not meet the traversal in two arcs");
  auto touches = [&](std::size_t e, const Arc& x) { return precedes(e, x, m) || follows(e, x, m); };
  for (const Arc& x : runs) {
    if (touches(v_pos[0], x) && touches(v_pos[1], x)) {
      r.type = FlypeType::II;
      r.a = x;
      r.b = x == runs[0] ? runs[1] : runs[0];
      return r;
    }
  }
  r.type = FlypeType::I;
  r.a = touches(v_pos[0], runs[0]) ? runs[0] : runs[1];
  r.b = r.a == runs[0] ? runs[1] : runs[0];
  return r;
}

TwistExtension extend_twist(const PseudoPD& d, int a_id, int b_id) {
  if (a_id == b_id) throw ValidationError("twist extension needs two distinct vertices");
  std::vector<Vertex> vs = d.vertices();
  const std::size_t a = d.index_of(a_id), b = d.index_of(b_id);
  if (!vs[a].is_precrossing() || !vs[b].is_precrossing()) {
    throw ValidationError("twist extension is defined for precrossings only");
  }
  std::vector<int> shared;
  for (int e : vs[a].edges) {
    if (std::count(vs[b].edges.begin(), vs[b].edges.end(), e) > 0 &&
        std::find(shared.begin(), shared.end(), e) == shared.end()) {
      shared.push_back(e);
    }
  }
  if (shared.size() != 2) throw ValidationError("vertices do not bound a bigon");
  auto slot = [](const Vertex& v, int e) {
    return static_cast<int>(std::find(v.edges.begin(), v.edges.end(), e) - v.edges.begin());
  };
  int e = shared[0], f = shared[1];
  if (slot(vs[a], e) != (slot(vs[a], f) + 1) % 4) std::swap(e, f);
  if (slot(vs[a], e) != (slot(vs[a], f) + 1) % 4 || slot(vs[b], f) != (slot(vs[b], e) + 1) % 4) {
    throw ValidationError("shared edges do not bound a bigon face");
  }
  const int next = max_label(vs) + 1;
  const int e2 = next, f2 = next + 1, e3 = next + 2, f3 = next + 3;
  vs[b].edges[slot(vs[b], e)] = e3;
  vs[b].edges[slot(vs[b], f)] = f3;
  int id = 0;
  for (const Vertex& v : vs) id = std::max(id, v.id);
  Vertex c{id + 1, VertexKind::precrossing, 0, {e, f, e2, f2}};
  Vertex dd{id + 2, VertexKind::precrossing, 0, {e3, f2, e2, f3}};
  vs.push_back(c);
  vs.push_back(dd);
  return {build_oriented(std::move(vs), a), c.id, dd.id};
}

PseudoPD p1_shadow() {
  return parse_pd("P(6,13,7,0) P(0,5,1,6) P(10,1,11,2) P(2,9,3,10) P(12,4,13,3) P(4,8,5,7) P(8,12,9,11)");
}

FamilyPair family(int m, int n) {
  if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0) {
    throw ValidationError("family members need even m, n >= 2 (got m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
  }
  PseudoPD d = p1_shadow();
  std::vector<int> twist_m{3, 4};
  for (int done = 2, partner = 4; done < m; done += 2) {
    TwistExtension x = extend_twist(d, 3, partner);
    d = std::move(x.diagram);
    twist_m.push_back(x.next_to_a);
    twist_m.push_back(x.next_to_b);
    partner = x.next_to_a;
  }
  for (int done = 2, partner = 2; done < n; done += 2) {
    TwistExtension x = extend_twist(d, 1, partner);
    d = std::move(x.diagram);
    partner = x.next_to_a;
  }
  FamilyPair out;
  out.site = make_flype_site(d, 7, twist_m);
  out.second = shadow_flype_pd(d, out.site);
  out.first = std::move(d);
  return out;
}

DecoratedChordDiagram family_chord_template(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("family template needs m, n >= 1");
  // Chord labels: 4, 5, 6 are fixed chords, 100+i the n-band, 200+i the m-band.
  std::vector<int> seq;
  for (int i = n; i >= 1; --i) seq.push_back(100 + i);
  seq.push_back(5);
  seq.push_back(6);
  for (int i = m; i >= 1; --i) seq.push_back(200 + i);
  seq.push_back(6);
  seq.push_back(4);
  for (int i = 1; i <= n; ++i) seq.push_back(100 + i);
  for (int i = 1; i <= m; ++i) seq.push_back(200 + i);
  seq.push_back(4);
  seq.push_back(5);
  std::map<int, std::size_t> first;
  std::vector<DecoratedChordDiagram::Chord> chords;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    auto [it, fresh] = first.emplace(seq[p], p);
    if (!fresh) chords.push_back({it->second, p, 0});
  }
  return DecoratedChordDiagram(seq.size(), std::move(chords));
}

}  // namespace pk
