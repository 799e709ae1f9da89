#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pseudoknot/gauss.hpp"

namespace pk {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, PR1Add, PR1Remove, PR2, PR3 };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::R1Add,  MoveKind::R1Remove, MoveKind::R2Add,
                                             MoveKind::R2Remove, MoveKind::R3,     MoveKind::PR1Add,
                                             MoveKind::PR1Remove, MoveKind::PR2,   MoveKind::PR3};

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// Where a move acts on the token sequence of a Gauss diagram. `at` holds
// positions whose meaning depends on the kind:
//   R1Add, PR1Add    {gap}: insert a chord with adjacent endpoints before
//                    position gap (gap == size appends). `sign` is the new
//                    classical sign; `head_first` puts the head token first.
//   R1Remove, PR1Remove {p}: tokens p and p+1 (cyclically) form the chord.
//   R2Add            {over_gap, under_gap}: two arrows with opposite signs,
//                    both tails inserted at over_gap, both heads at
//                    under_gap. `sign` is the sign of the first arrow along
//                    the over strand; `antiparallel` reverses the order of
//                    the heads.
//   R2Remove         {p, q}: tails at p, p+1 and the matching heads at q, q+1.
//   R3, PR3          {p, q, r}: three disjoint adjacent pairs forming a
//                    triangle; every pair is swapped.
//   PR2              {p, q}: a prechord and a classical arrow with endpoints
//                    at p, p+1 and q, q+1; both pairs are swapped.
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  std::vector<std::size_t> at;
  int sign = 1;
  bool head_first = false;
  bool antiparallel = false;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Sites of the rewriting moves (removals, R3, PR2, PR3) present in g.
// Insertions are possible everywhere and are not listed.
std::vector<MoveSite> enumerate_sites(const PseudoGaussDiagram& g);

// Whether the local pattern required by `site` is present in g.
bool site_matches(const PseudoGaussDiagram& g, const MoveSite& site);

// Throws ValidationError when the pattern does not match. New chords get
// ids above every id in g.
PseudoGaussDiagram apply_move(const PseudoGaussDiagram& g, const MoveSite& site);

struct ScrambleOptions {
  unsigned insert_percent = 70;  // chance of an insertion at each step
  bool pseudo_moves = true;      // false: only R1, R2 and R3
};

// `steps` moves chosen pseudorandomly (mt19937_64 seeded with `seed`).
// With probability insert_percent a chord pair or kink is inserted,
// sometimes next to existing chords so that bigons and triangles appear;
// otherwise a listed site is applied, choosing the move kind first. The
// sequence of applied moves is appended to `log` when given.
PseudoGaussDiagram scramble(const PseudoGaussDiagram& g, std::uint64_t seed, std::size_t steps,
                            const ScrambleOptions& options = {}, std::vector<MoveSite>* log = nullptr);

}  // namespace pk
