#include "pseudoknot/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "pseudoknot/error.hpp"

namespace pk {

PseudoGaussDiagram::PseudoGaussDiagram(std::vector<GaussToken> tokens) : tokens_(std::move(tokens)) {
  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < tokens_.size(); ++i) where[tokens_[i].id].push_back(i);
  partner_.assign(tokens_.size(), 0);
  for (const auto& [id, pos] : where) {
    const std::string name = "crossing " + std::to_string(id);
    if (pos.size() != 2) {
      throw ValidationError(name + " appears " + std::to_string(pos.size()) + " times (expected 2)");
    }
    const GaussToken& a = tokens_[pos[0]];
    const GaussToken& b = tokens_[pos[1]];
    if (a.precrossing != b.precrossing) throw ValidationError(name + " mixes classical and precrossing tokens");
    if (a.head == b.head) throw ValidationError(name + " needs one head/under and one tail/over token");
    if (a.precrossing) {
      if (a.sign != 0 || b.sign != 0) throw ValidationError(name + ": precrossing tokens carry no sign");
    } else {
      if (a.sign != 1 && a.sign != -1) throw ValidationError(name + ": classical sign must be +1 or -1");
      if (a.sign != b.sign) throw ValidationError(name + ": tokens disagree on the sign");
    }
    partner_[pos[0]] = pos[1];
    partner_[pos[1]] = pos[0];
  }
}

std::vector<int> PseudoGaussDiagram::ids() const {
  std::set<int> s;
  for (const GaussToken& t : tokens_) s.insert(t.id);
  return {s.begin(), s.end()};
}

std::vector<int> PseudoGaussDiagram::precrossing_ids() const {
  std::set<int> s;
  for (const GaussToken& t : tokens_) {
    if (t.precrossing) s.insert(t.id);
  }
  return {s.begin(), s.end()};
}

bool PseudoGaussDiagram::all_classical() const {
  return std::none_of(tokens_.begin(), tokens_.end(), [](const GaussToken& t) { return t.precrossing; });
}

std::string PseudoGaussDiagram::to_string() const {
  std::string out;
  for (const GaussToken& t : tokens_) {
    if (!out.empty()) out += ',';
    if (t.precrossing) {
      out += t.head ? "Ph" : "Pt";
      out += std::to_string(t.id);
    } else {
      out += t.head ? 'U' : 'O';
      out += std::to_string(t.id);
      out += t.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

PseudoGaussDiagram parse_gauss(std::string_view text) {
  std::vector<GaussToken> tokens;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_id = [&]() -> int {
    const std::size_t begin = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000'000) throw ParseError("crossing id too large", begin);
      ++i;
    }
    if (i == begin) throw ParseError("expected crossing id", i);
    return static_cast<int>(v);
  };

  skip_ws();
  if (i == text.size()) return PseudoGaussDiagram();
  while (true) {
    skip_ws();
    GaussToken t;
    const std::size_t at = i;
    if (i < text.size() && (text[i] == 'O' || text[i] == 'U')) {
      t.head = text[i] == 'U';
      ++i;
      t.id = read_id();
      if (i < text.size() && text[i] == '+') {
        t.sign = 1;
        ++i;
      } else if (i < text.size() && text[i] == '-') {
        t.sign = -1;
        ++i;
      } else if (text.substr(i, 3) == "\xE2\x88\x92") {
        t.sign = -1;
        i += 3;
      } else {
        throw ParseError("expected sign after classical token", i);
      }
    } else if (i + 1 < text.size() && text[i] == 'P' && (text[i + 1] == 'h' || text[i + 1] == 't')) {
      t.precrossing = true;
      t.head = text[i + 1] == 'h';
      i += 2;
      t.id = read_id();
    } else {
      throw ParseError("expected token O<id><sign>, U<id><sign>, Ph<id> or Pt<id>", at);
    }
    tokens.push_back(t);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return PseudoGaussDiagram(std::move(tokens));
}

PseudoGaussDiagram pd_to_gauss(const PseudoPD& d) {
  const std::vector<Pass> passes = traverse(d);
  // Slot (1 or 3) through which strand two enters each vertex.
  std::vector<int> second(d.size(), -1);
  for (const Pass& p : passes) {
    if (p.slot % 2 == 1) second[p.vertex] = p.slot;
  }
  std::vector<GaussToken> tokens;
  tokens.reserve(passes.size());
  for (const Pass& p : passes) {
    const Vertex& v = d.vertices()[p.vertex];
    const bool strand_one = p.slot % 2 == 0;
    GaussToken t;
    t.id = v.id;
    if (v.is_precrossing()) {
      // The sign +1 resolution puts strand one under iff strand two runs d->b.
      const bool one_under_if_positive = second[p.vertex] == 3;
      t.precrossing = true;
      t.head = strand_one == one_under_if_positive;
    } else {
      t.sign = v.sign;
      t.head = strand_one;
    }
    tokens.push_back(t);
  }
  return PseudoGaussDiagram(std::move(tokens));
}

PseudoPD gauss_to_pd(const PseudoGaussDiagram& g) {
  const std::size_t m = g.size();
  if (m == 0) return PseudoPD();
  // Edge t+1 enters token t, so edge 1 enters token 0.
  auto in_edge = [](std::size_t t) { return static_cast<int>(t) + 1; };
  auto out_edge = [m](std::size_t t) { return static_cast<int>((t + 1) % m) + 1; };

  std::map<int, Vertex> by_id;
  for (std::size_t t = 0; t < m; ++t) {
    const GaussToken& tok = g.tokens()[t];
    if (!tok.head) continue;
    const std::size_t tail = g.partner(t);
    Vertex v;
    v.id = tok.id;
    // Head strand is under in the classical reading and in the sign +1
    // reading of a precrossing. Over strand runs slot 3 -> slot 1 for a
    // positive crossing, slot 1 -> slot 3 for a negative one.
    const int sign = tok.precrossing ? 1 : tok.sign;
    if (sign > 0) {
      v.edges = {in_edge(t), out_edge(tail), out_edge(t), in_edge(tail)};
    } else {
      v.edges = {in_edge(t), in_edge(tail), out_edge(t), out_edge(tail)};
    }
    v.kind = tok.precrossing ? VertexKind::precrossing : VertexKind::classical;
    v.sign = tok.precrossing ? 0 : tok.sign;
    by_id[v.id] = v;
  }
  std::vector<Vertex> vs;
  for (auto& [id, v] : by_id) vs.push_back(v);
  return PseudoPD(std::move(vs));
}

PseudoGaussDiagram resolve_gauss(const PseudoGaussDiagram& g, std::span<const int> choice) {
  const std::vector<int> ids = g.precrossing_ids();
  if (choice.size() != ids.size()) {
    throw ValidationError("choice has " + std::to_string(choice.size()) + " entries but diagram has " +
                          std::to_string(ids.size()) + " precrossings");
  }
  std::map<int, int> by_id;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (choice[i] != 1 && choice[i] != -1) throw ValidationError("choice entries must be +1 or -1");
    by_id[ids[i]] = choice[i];
  }
  std::vector<GaussToken> out = g.tokens();
  for (GaussToken& t : out) {
    if (!t.precrossing) continue;
    const int s = by_id.at(t.id);
    t.precrossing = false;
    t.sign = s;
    if (s < 0) t.head = !t.head;
  }
  return PseudoGaussDiagram(std::move(out));
}

PseudoGaussDiagram rotated(const PseudoGaussDiagram& g, std::size_t k) {
  std::vector<GaussToken> t = g.tokens();
  if (!t.empty()) std::rotate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k % t.size()), t.end());
  return PseudoGaussDiagram(std::move(t));
}

bool same_up_to_rotation_and_ids(const PseudoGaussDiagram& a, const PseudoGaussDiagram& b) {
  if (a.size() != b.size()) return false;
  const std::size_t m = a.size();
  for (std::size_t r = 0; r < std::max<std::size_t>(m, 1); ++r) {
    bool ok = true;
    std::map<int, int> rename;
    for (std::size_t i = 0; i < m && ok; ++i) {
      const GaussToken& x = a.tokens()[i];
      const GaussToken& y = b.tokens()[(i + r) % m];
      if (x.precrossing != y.precrossing || x.head != y.head || x.sign != y.sign) {
        ok = false;
        break;
      }
      auto [it, inserted] = rename.emplace(x.id, y.id);
      if (!inserted && it->second != y.id) ok = false;
    }
    if (ok) {
      std::set<int> targets;
      for (const auto& [from, to] : rename) targets.insert(to);
      if (targets.size() == rename.size()) return true;
    }
  }
  return false;
}

}  // namespace pk
