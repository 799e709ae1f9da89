#include "pseudoknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

struct Ring {
  std::size_t m;
  std::size_t next(std::size_t p) const { return (p + 1) % m; }
  // Start of the adjacent pair {a, b}, or m when they are not adjacent.
  std::size_t pair_start(std::size_t a, std::size_t b) const {
    if (a == b) return m;
    if (next(a) == b) return a;
    if (next(b) == a) return b;
    return m;
  }
};

int fresh_id(const PseudoGaussDiagram& g) {
  int id = 0;
  for (const GaussToken& t : g.tokens()) id = std::max(id, t.id);
  return id + 1;
}

// Inserts each token group before position gap (gap == size appends).
// Groups at the same gap keep their order.
std::vector<GaussToken> insert_groups(const std::vector<GaussToken>& tokens,
                                      std::vector<std::pair<std::size_t, std::vector<GaussToken>>> groups) {
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GaussToken> out;
  std::size_t gi = 0;
  for (std::size_t p = 0; p <= tokens.size(); ++p) {
    while (gi < groups.size() && groups[gi].first == p) {
      out.insert(out.end(), groups[gi].second.begin(), groups[gi].second.end());
      ++gi;
    }
    if (p < tokens.size()) out.push_back(tokens[p]);
  }
  return out;
}

std::vector<GaussToken> erase_positions(const std::vector<GaussToken>& tokens, std::vector<std::size_t> positions) {
  std::sort(positions.begin(), positions.end());
  std::vector<GaussToken> out;
  for (std::size_t p = 0; p < tokens.size(); ++p) {
    if (!std::binary_search(positions.begin(), positions.end(), p)) out.push_back(tokens[p]);
  }
  return out;
}

bool distinct(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Shared check for R3 and PR3 on three adjacent pairs. Lines are the
// pairs in the given order. A prechord is read as its sign +1 resolution.
bool triangle_ok(const PseudoGaussDiagram& g, const std::array<std::size_t, 3>& start, bool pseudo) {
  const std::size_t m = g.size();
  if (m < 6) return false;
  const Ring ring{m};
  std::array<std::array<std::size_t, 2>, 3> pos{};
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < 3; ++i) {
    if (start[i] >= m) return false;
    pos[i] = {start[i], ring.next(start[i])};
    all.push_back(pos[i][0]);
    all.push_back(pos[i][1]);
  }
  if (!distinct(all)) return false;
  auto line_of = [&](std::size_t p) -> int {
    for (int i = 0; i < 3; ++i) {
      if (pos[i][0] == p || pos[i][1] == p) return i;
    }
    return -1;
  };

  // chord[i][j]: position on line i of the chord shared with line j.
  std::array<std::array<std::size_t, 3>, 3> chord{};
  std::array<std::array<bool, 3>, 3> seen{};
  int prechords = 0;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t p : pos[i]) {
      const int j = line_of(g.partner(p));
      if (j < 0 || j == i || seen[i][j]) return false;
      seen[i][j] = true;
      chord[i][j] = p;
      if (g.tokens()[p].precrossing && i < j) ++prechords;
    }
  }
  if (pseudo ? prechords != 1 : prechords != 0) return false;

  auto sign_of = [&](std::size_t p) { return g.tokens()[p].precrossing ? 1 : g.tokens()[p].sign; };
  // over[i][j]: line i passes over line j.
  std::array<std::array<bool, 3>, 3> over{};
  std::array<std::array<bool, 3>, 3> cross{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const std::size_t p = chord[i][j];
      over[i][j] = !g.tokens()[p].head;
      cross[i][j] = over[i][j] ? sign_of(p) > 0 : sign_of(p) < 0;
    }
  }
  // o[i]: along line i the crossing with the lower-numbered other line comes first.
  std::array<bool, 3> o{};
  for (int i = 0; i < 3; ++i) {
    const int lo = i == 0 ? 1 : 0;
    o[i] = chord[i][lo] == pos[i][0];
  }
  if ((cross[0][1] != cross[0][2]) != (o[1] != o[2])) return false;
  if ((cross[0][2] != cross[1][2]) != (o[0] != o[1])) return false;
  const bool cyclic = (over[0][1] && over[1][2] && over[2][0]) || (over[1][0] && over[2][1] && over[0][2]);
  if (cyclic) return false;
  if (pseudo) {
    // The line that avoids the prechord passes over both others or under both.
    for (int k = 0; k < 3; ++k) {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      if (!g.tokens()[chord[i][j]].precrossing) continue;
      if (over[k][i] != over[k][j]) return false;
    }
  }
  return true;
}

bool kink_ok(const PseudoGaussDiagram& g, std::size_t p, bool pseudo) {
  const std::size_t m = g.size();
  if (m < 2 || p >= m) return false;
  const Ring ring{m};
  const std::size_t q = ring.next(p);
  return g.partner(p) == q && g.tokens()[p].precrossing == pseudo;
}

bool r2_remove_ok(const PseudoGaussDiagram& g, std::size_t p, std::size_t q) {
  const std::size_t m = g.size();
  if (m < 4 || p >= m || q >= m) return false;
  const Ring ring{m};
  const std::size_t p2 = ring.next(p), q2 = ring.next(q);
  if (!distinct({p, p2, q, q2})) return false;
  const GaussToken& a = g.tokens()[p];
  const GaussToken& b = g.tokens()[p2];
  if (a.precrossing || b.precrossing || a.head || b.head || a.id == b.id) return false;
  if (a.sign != -b.sign) return false;
  const std::size_t ha = g.partner(p), hb = g.partner(p2);
  return ring.pair_start(ha, hb) == q;
}

bool pr2_ok(const PseudoGaussDiagram& g, std::size_t p, std::size_t q) {
  const std::size_t m = g.size();
  if (m < 4 || p >= m || q >= m) return false;
  const Ring ring{m};
  const std::size_t p2 = ring.next(p), q2 = ring.next(q);
  if (!distinct({p, p2, q, q2})) return false;
  const GaussToken& a = g.tokens()[p];
  const GaussToken& b = g.tokens()[p2];
  if (a.precrossing == b.precrossing) return false;
  if (ring.pair_start(g.partner(p), g.partner(p2)) != q) return false;
  const std::size_t pre = a.precrossing ? p : p2;
  const std::size_t cls = a.precrossing ? p2 : p;
  // Tails on the same strand need a negative classical crossing, tails on
  // different strands a positive one.
  const bool same_strand = g.tokens()[pre].head == g.tokens()[cls].head;
  return g.tokens()[cls].sign == (same_strand ? -1 : 1);
}

bool check_site(const PseudoGaussDiagram& g, const MoveSite& s) {
  const std::size_t m = g.size();
  auto need = [&](std::size_t n) { return s.at.size() == n; };
  switch (s.kind) {
    case MoveKind::R1Add:
    case MoveKind::PR1Add:
      return need(1) && s.at[0] <= m && (s.kind == MoveKind::PR1Add || s.sign == 1 || s.sign == -1);
    case MoveKind::R1Remove:
      return need(1) && kink_ok(g, s.at[0], false);
    case MoveKind::PR1Remove:
      return need(1) && kink_ok(g, s.at[0], true);
    case MoveKind::R2Add:
      return need(2) && m >= 2 && s.at[0] <= m && s.at[1] <= m && s.at[0] % m != s.at[1] % m &&
             (s.sign == 1 || s.sign == -1);
    case MoveKind::R2Remove:
      return need(2) && r2_remove_ok(g, s.at[0], s.at[1]);
    case MoveKind::PR2:
      return need(2) && pr2_ok(g, s.at[0], s.at[1]);
    case MoveKind::R3:
    case MoveKind::PR3:
      return need(3) && triangle_ok(g, {s.at[0], s.at[1], s.at[2]}, s.kind == MoveKind::PR3);
  }
  return false;
}

std::vector<GaussToken> swap_pairs(std::vector<GaussToken> t, const std::vector<std::size_t>& starts) {
  const Ring ring{t.size()};
  for (std::size_t p : starts) std::swap(t[p], t[ring.next(p)]);
  return t;
}

}  // namespace

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1Add";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Add: return "R2Add";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
    case MoveKind::PR1Add: return "PR1Add";
    case MoveKind::PR1Remove: return "PR1Remove";
    case MoveKind::PR2: return "PR2";
    case MoveKind::PR3: return "PR3";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : kAllMoveKinds) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown move kind '" + s + "'", 0);
}

bool site_matches(const PseudoGaussDiagram& g, const MoveSite& site) { return check_site(g, site); }

std::vector<MoveSite> enumerate_sites(const PseudoGaussDiagram& g) {
  std::vector<MoveSite> out;
  const std::size_t m = g.size();
  if (m == 0) return out;
  const Ring ring{m};
  for (std::size_t p = 0; p < m; ++p) {
    if (m == 2 && p == 1) break;  // the lone chord is found once
    if (kink_ok(g, p, false)) out.push_back({MoveKind::R1Remove, {p}});
    if (kink_ok(g, p, true)) out.push_back({MoveKind::PR1Remove, {p}});
  }
  for (std::size_t p = 0; p < m && m >= 4; ++p) {
    const std::size_t p2 = ring.next(p);
    const std::size_t q = ring.pair_start(g.partner(p), g.partner(p2));
    if (q == m) continue;
    if (r2_remove_ok(g, p, q)) out.push_back({MoveKind::R2Remove, {p, q}});
    if (p < q && pr2_ok(g, p, q)) out.push_back({MoveKind::PR2, {p, q}});
  }
  // Triangles: the pair at p meets two other pairs through its partners.
  for (std::size_t p = 0; p < m && m >= 6; ++p) {
    const std::size_t p2 = ring.next(p);
    const std::size_t a = g.partner(p), b = g.partner(p2);
    for (std::size_t q : {(a + m - 1) % m, a}) {
      for (std::size_t r : {(b + m - 1) % m, b}) {
        std::array<std::size_t, 3> s{p, q, r};
        std::sort(s.begin(), s.end());
        if (s[0] != p) continue;  // report each triangle from its first pair
        for (MoveKind k : {MoveKind::R3, MoveKind::PR3}) {
          if (triangle_ok(g, s, k == MoveKind::PR3)) {
            MoveSite site{k, {s[0], s[1], s[2]}};
            if (std::find(out.begin(), out.end(), site) == out.end()) out.push_back(site);
          }
        }
      }
    }
  }
  return out;
}

PseudoGaussDiagram apply_move(const PseudoGaussDiagram& g, const MoveSite& s) {
  if (!check_site(g, s)) throw ValidationError(to_string(s.kind) + " pattern does not match at the given site");
  const std::vector<GaussToken>& t = g.tokens();
  const Ring ring{g.size()};
  switch (s.kind) {
    case MoveKind::R1Add:
    case MoveKind::PR1Add: {
      const bool pre = s.kind == MoveKind::PR1Add;
      const int id = fresh_id(g);
      const int sign = pre ? 0 : s.sign;
      GaussToken head{id, pre, true, sign}, tail{id, pre, false, sign};
      std::vector<GaussToken> pair = s.head_first ? std::vector{head, tail} : std::vector{tail, head};
      return PseudoGaussDiagram(insert_groups(t, {{s.at[0], pair}}));
    }
    case MoveKind::R1Remove:
    case MoveKind::PR1Remove:
      return PseudoGaussDiagram(erase_positions(t, {s.at[0], ring.next(s.at[0])}));
    case MoveKind::R2Add: {
      const int x = fresh_id(g), y = x + 1;
      std::vector<GaussToken> tails{{x, false, false, s.sign}, {y, false, false, -s.sign}};
      std::vector<GaussToken> heads{{x, false, true, s.sign}, {y, false, true, -s.sign}};
      if (s.antiparallel) std::swap(heads[0], heads[1]);
      return PseudoGaussDiagram(insert_groups(t, {{s.at[0], tails}, {s.at[1], heads}}));
    }
    case MoveKind::R2Remove:
      return PseudoGaussDiagram(
          erase_positions(t, {s.at[0], ring.next(s.at[0]), s.at[1], ring.next(s.at[1])}));
    case MoveKind::PR2:
    case MoveKind::R3:
    case MoveKind::PR3:
      return PseudoGaussDiagram(swap_pairs(t, s.at));
  }
  throw InternalError("unhandled move kind");
}

namespace {

struct Draw {
  std::mt19937_64 rng;
  std::uint64_t operator()(std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
  bool coin() { return rng() % 2 == 0; }
  int sign() { return coin() ? 1 : -1; }
};

std::size_t position_of(const PseudoGaussDiagram& g, int id, bool head) {
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g.tokens()[p].id == id && g.tokens()[p].head == head) return p;
  }
  throw InternalError("token not found");
}

// Picks an insertion; may return two moves (a triangle seed) when the
// budget allows. Moves are returned in application order, each valid on
// the diagram produced by the previous ones.
std::vector<MoveSite> random_insertion(const PseudoGaussDiagram& g, Draw& draw, std::size_t budget, bool pseudo) {
  const std::size_t m = g.size();
  std::uint64_t variant = draw(m >= 2 ? (budget >= 2 && m >= 4 ? 5 : 4) : 2);
  if (!pseudo && variant == 1) variant = 0;
  switch (variant) {
    case 0:
      return {{MoveKind::R1Add, {draw(m + 1)}, draw.sign(), draw.coin()}};
    case 1:
      return {{MoveKind::PR1Add, {draw(m + 1)}, 1, draw.coin()}};
    case 2: {
      const std::size_t a = draw(m);
      std::size_t b = draw(m - 1);
      if (b >= a) ++b;
      return {{MoveKind::R2Add, {a, b}, draw.sign(), false, draw.coin()}};
    }
    case 3: {
      // Next to both endpoints of an existing chord: makes a bigon.
      const std::size_t a = draw(m);
      const std::size_t b = g.partner(a);
      const std::size_t ga = a + (draw.coin() ? 1 : 0);
      const std::size_t gb = b + (draw.coin() ? 1 : 0);
      if (ga % m == gb % m) return {{pseudo ? MoveKind::PR1Add : MoveKind::R1Add, {ga}, draw.sign(), draw.coin()}};
      MoveSite s{MoveKind::R2Add, {ga, gb}, draw.sign(), false, draw.coin()};
      if (draw.coin()) std::swap(s.at[0], s.at[1]);
      return {s};
    }
    default: {
      // Two arrow pairs pushed across both strands of a chord: makes a triangle.
      const std::size_t a = draw(m);
      const int x_id = g.tokens()[a].id;
      const bool x_head_a = g.tokens()[a].head;
      const bool after_a = draw.coin(), after_b = draw.coin();
      const std::size_t ga = a + (after_a ? 1 : 0);
      std::size_t gc = draw(m);
      if (gc % m == ga % m) gc = (gc + 1) % m;
      MoveSite first{MoveKind::R2Add, {ga, gc}, draw.sign(), false, draw.coin()};
      if (draw.coin()) std::swap(first.at[0], first.at[1]);
      const PseudoGaussDiagram mid = apply_move(g, first);

      const int y1 = fresh_id(g);
      // The new arrow next to the chord on strand A.
      const std::size_t xa = position_of(mid, x_id, x_head_a);
      const Ring ring{mid.size()};
      const std::size_t beside = after_a ? ring.next(xa) : (xa + mid.size() - 1) % mid.size();
      const int yk = mid.tokens()[beside].id;
      if (yk != y1 && yk != y1 + 1) return {first};
      const std::size_t yc = mid.partner(beside);
      const std::size_t yother = mid.partner(position_of(mid, yk == y1 ? y1 + 1 : y1, mid.tokens()[beside].head));
      const bool c_after = ring.next(yc) != yother;  // move away from the other new arrow
      const std::size_t gc2 = yc + (c_after ? 1 : 0);
      const std::size_t xb = position_of(mid, x_id, !x_head_a);
      const std::size_t gb2 = xb + (after_b ? 1 : 0);
      if (gb2 % mid.size() == gc2 % mid.size()) return {first};

      MoveSite second{MoveKind::R2Add, {gb2, gc2}, draw.sign(), false, false};
      const bool b_over = draw.coin();
      if (!b_over) std::swap(second.at[0], second.at[1]);
      // The same new arrow must touch both the chord and the first pair:
      // the arrow adjacent to a gap is the first of its group when the gap
      // lies after the old token, the last otherwise.
      auto adjacent_index = [](bool after, bool over_side, bool anti) {
        const int slot = after ? 0 : 1;
        if (over_side || !anti) return slot;
        return 1 - slot;
      };
      for (bool anti : {false, true}) {
        if (adjacent_index(after_b, b_over, anti) == adjacent_index(c_after, !b_over, anti)) {
          second.antiparallel = anti;
          break;
        }
      }
      return {first, second};
    }
  }
}

}  // namespace

PseudoGaussDiagram scramble(const PseudoGaussDiagram& g, std::uint64_t seed, std::size_t steps,
                            const ScrambleOptions& options, std::vector<MoveSite>* log) {
  Draw draw{std::mt19937_64(seed)};
  PseudoGaussDiagram cur = g;
  std::size_t done = 0;
  while (done < steps) {
    std::vector<MoveSite> batch;
    bool insert = draw(100) < options.insert_percent;
    if (!insert) {
      const std::vector<MoveSite> sites = enumerate_sites(cur);
      std::map<MoveKind, std::vector<MoveSite>> by_kind;
      for (const MoveSite& s : sites) {
        const bool pseudo = s.kind == MoveKind::PR1Remove || s.kind == MoveKind::PR2 || s.kind == MoveKind::PR3;
        if (options.pseudo_moves || !pseudo) by_kind[s.kind].push_back(s);
      }
      if (by_kind.empty()) {
        insert = true;
      } else {
        auto it = by_kind.begin();
        std::advance(it, static_cast<long>(draw(by_kind.size())));
        batch.push_back(it->second[draw(it->second.size())]);
      }
    }
    if (insert) batch = random_insertion(cur, draw, steps - done, options.pseudo_moves);
    for (const MoveSite& s : batch) {
      cur = apply_move(cur, s);
      if (log) log->push_back(s);
      ++done;
    }
  }
  return cur;
}

}  // namespace pk
