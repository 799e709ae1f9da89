#include "pseudoknot/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

#include "pseudoknot/error.hpp"

namespace pk {

std::vector<BraidLetter> parse_braid(std::string_view text) {
  std::vector<BraidLetter> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    BraidLetter l{0, BraidCrossing::positive};
    if (text[i] == 'p' || text[i] == 'P') {
      l.kind = BraidCrossing::pre;
      ++i;
    } else if (text[i] == '-') {
      l.kind = BraidCrossing::negative;
      ++i;
    }
    const auto r = std::from_chars(text.data() + i, text.data() + text.size(), l.generator);
    if (r.ec != std::errc() || l.generator < 1) throw ParseError("bad braid letter", start);
    i = static_cast<std::size_t>(r.ptr - text.data());
    word.push_back(l);
  }
  return word;
}

PseudoPD braid_closure(int strands, const std::vector<BraidLetter>& word) {
  if (strands < 1) throw ValidationError("a braid needs at least one strand");
  if (strands == 1) {
    if (!word.empty()) throw ValidationError("a one-strand braid has no generators");
    return PseudoPD();
  }
  std::vector<bool> used(strands, false);
  std::vector<int> label(strands);
  std::iota(label.begin(), label.end(), 0);
  int next = strands;
  std::vector<Vertex> vs;
  for (const BraidLetter& l : word) {
    if (l.generator < 1 || l.generator >= strands) {
      throw ValidationError("generator " + std::to_string(l.generator) + " outside a " + std::to_string(strands) +
                            "-strand braid");
    }
    used[l.generator] = true;
    const int i = l.generator - 1;
    const int in_l = label[i], in_r = label[i + 1];
    const int out_l = next++, out_r = next++;
    Vertex v;
    v.id = static_cast<int>(vs.size()) + 1;
    switch (l.kind) {
      case BraidCrossing::pre:
        v.kind = VertexKind::precrossing;
        v.edges = {in_l, in_r, out_r, out_l};
        break;
      case BraidCrossing::positive:
        v.kind = VertexKind::classical;
        v.sign = 1;
        v.edges = {in_r, out_r, out_l, in_l};
        break;
      case BraidCrossing::negative:
        v.kind = VertexKind::classical;
        v.sign = -1;
        v.edges = {in_l, in_r, out_r, out_l};
        break;
    }
    vs.push_back(v);
    label[i] = out_l;
    label[i + 1] = out_r;
  }
  for (int g = 1; g < strands; ++g) {
    if (!used[g]) throw ValidationError("braid closure is split: generator " + std::to_string(g) + " unused");
  }
  // Closing the braid identifies the top of each position with its bottom.
  for (Vertex& v : vs) {
    for (int& e : v.edges) {
      for (int j = 0; j < strands; ++j) {
        if (e == label[j]) e = j;
      }
    }
  }
  return PseudoPD(std::move(vs));
}

namespace {

bool closes_to_knot(int strands, const std::vector<BraidLetter>& word) {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(strands, false);
  for (const BraidLetter& l : word) {
    std::swap(perm[l.generator - 1], perm[l.generator]);
    used[l.generator] = true;
  }
  for (int g = 1; g < strands; ++g) {
    if (!used[g]) return false;
  }
  int len = 0;
  int at = 0;
  do {
    at = perm[at];
    ++len;
  } while (at != 0);
  return len == strands;
}

}  // namespace

PseudoPD random_shadow(std::mt19937_64& rng, std::size_t precrossings, int strands) {
  if (precrossings == 0) return PseudoPD();
  const int k = static_cast<int>(precrossings);
  strands = std::clamp(strands, 2, k + 1);
  // k transpositions make a single cycle on s points only if k and s - 1 agree in parity.
  if ((k - strands + 1) % 2 != 0) strands += strands + 1 <= k + 1 ? 1 : -1;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<BraidLetter> word;
    for (std::size_t i = 0; i < precrossings; ++i) {
      word.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1)), BraidCrossing::pre});
    }
    if (closes_to_knot(strands, word)) return braid_closure(strands, word);
  }
  throw ValidationError("no knot shadow with " + std::to_string(precrossings) + " precrossings on " +
                        std::to_string(strands) + " strands");
}

}  // namespace pk
