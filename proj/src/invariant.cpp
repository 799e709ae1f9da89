#include "pseudoknot/invariant.hpp"

#include <map>

namespace pk {

DecoratedChordDiagram compute_i(const PseudoGaussDiagram& g, KinkDeletion mode) {
  const std::size_t m = g.size();

  // Decoration of each prechord, keyed by the position of its first endpoint.
  std::map<std::size_t, std::int64_t> decoration;
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t q = g.partner(p);
    if (!g.tokens()[p].precrossing || q < p) continue;
    std::int64_t sum = 0;
    for (std::size_t r = p + 1; r < q; ++r) {
      const GaussToken& t = g.tokens()[r];
      if (t.precrossing) continue;
      const std::size_t s = g.partner(r);
      if (s < p || s > q) sum += t.sign;
    }
    decoration[p] = sum;
  }

  // Surviving endpoints, as original positions in circular order.
  std::vector<std::size_t> alive;
  for (std::size_t p = 0; p < m; ++p) {
    if (g.tokens()[p].precrossing) alive.push_back(p);
  }

  auto deletable = [&](const std::vector<std::size_t>& seq, std::size_t i) {
    const std::size_t p = seq[i];
    const std::size_t q = g.partner(p);
    const std::size_t lo = std::min(p, q);
    if (decoration.at(lo) != 0) return false;
    const std::size_t n = seq.size();
    return seq[(i + 1) % n] == q || seq[(i + n - 1) % n] == q;
  };

  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    std::vector<bool> drop(m, false);
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (deletable(alive, i)) {
        drop[alive[i]] = true;
        drop[g.partner(alive[i])] = true;
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t p : alive) {
      if (!drop[p]) next.push_back(p);
    }
    changed = next.size() != alive.size();
    alive = std::move(next);
    if (mode == KinkDeletion::single_pass) break;
  }

  std::map<std::size_t, std::size_t> new_position;
  for (std::size_t i = 0; i < alive.size(); ++i) new_position[alive[i]] = i;
  std::vector<DecoratedChordDiagram::Chord> chords;
  for (std::size_t p : alive) {
    const std::size_t q = g.partner(p);
    if (q < p) continue;
    chords.push_back({new_position.at(p), new_position.at(q), decoration.at(p)});
  }
  return DecoratedChordDiagram(alive.size(), std::move(chords));
}

}  // namespace pk
