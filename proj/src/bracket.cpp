#include "pseudoknot/bracket.hpp"

#include <map>
#include <stdexcept>

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

// Absorbs crossings so that each next one shares as many edges as possible
// with those already absorbed.
std::vector<std::size_t> sweep_order(const std::vector<Vertex>& vs) {
  const std::size_t n = vs.size();
  std::vector<bool> used(n, false);
  std::map<int, int> seen;  // edge label -> occurrences among absorbed crossings
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_score = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      int score = 0;
      for (int e : vs[v].edges) score += seen.count(e) ? 2 - seen[e] : 0;
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int e : vs[best].edges) ++seen[e];
  }
  return order;
}

// Open arcs of a partial state: open[x] is the label at the other end of
// the arc leaving through edge x, or 0 when x is not open.
using Key = std::vector<std::pair<int, int>>;

struct Frontier {
  std::vector<int> open;
  int loops = 0;

  void join(int x, int y) {
    if (x == y) {
      ++loops;
      return;
    }
    const int px = open[static_cast<std::size_t>(x)];
    const int py = open[static_cast<std::size_t>(y)];
    if (px == y) {
      open[static_cast<std::size_t>(x)] = open[static_cast<std::size_t>(y)] = 0;
      ++loops;
      return;
    }
    const int ex = px ? px : x;
    const int ey = py ? py : y;
    if (px) open[static_cast<std::size_t>(x)] = 0;
    if (py) open[static_cast<std::size_t>(y)] = 0;
    open[static_cast<std::size_t>(ex)] = ey;
    open[static_cast<std::size_t>(ey)] = ex;
  }

  Key key() const {
    Key k;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (open[i]) k.emplace_back(static_cast<int>(i), open[i]);
    }
    return k;
  }
};

}  // namespace

LaurentPolynomial kauffman_bracket(const ResolvedPD& d) {
  const std::vector<Vertex>& vs = d.vertices();
  if (vs.empty()) return LaurentPolynomial(1);

  int max_label = 0;
  for (const Vertex& v : vs) {
    for (int e : v.edges) max_label = std::max(max_label, e);
  }
  const LaurentPolynomial delta = LaurentPolynomial::from_terms({{-2, -1}, {2, -1}});
  const LaurentPolynomial a = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial a_inv = LaurentPolynomial::monomial(1, -1);

  std::map<Key, LaurentPolynomial> states;
  states[Key{}] = LaurentPolynomial(1);

  const std::vector<std::size_t> order = sweep_order(vs);
  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto& [e0, e1, e2, e3] = vs[order[step]].edges;
    const bool last = step + 1 == order.size();
    std::map<Key, LaurentPolynomial> next;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        Frontier f{std::vector<int>(static_cast<std::size_t>(max_label) + 1, 0), 0};
        for (const auto& [x, y] : key) f.open[static_cast<std::size_t>(x)] = y;
        if (smoothing == 0) {  // A: joins slots (0,1) and (2,3)
          f.join(e0, e1);
          f.join(e2, e3);
        } else {  // B: joins slots (0,3) and (1,2)
          f.join(e0, e3);
          f.join(e1, e2);
        }
        LaurentPolynomial term = poly * (smoothing == 0 ? a : a_inv);
        const int factors = last ? f.loops - 1 : f.loops;
        if (factors < 0) throw InternalError("bracket sweep ended without closing a loop");
        for (int i = 0; i < factors; ++i) term *= delta;
        next[f.key()] += term;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty()) {
    throw InternalError("bracket sweep left open arcs");
  }
  return states.begin()->second;
}

LaurentPolynomial normalized_bracket(const ResolvedPD& d) {
  const int w = writhe(d);
  const LaurentPolynomial factor = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return factor * kauffman_bracket(d);
}

LaurentPolynomial jones_from_normalized_bracket(const LaurentPolynomial& f) {
  try {
    return f.divided_exponents(4).reflected();
  } catch (const std::domain_error&) {
    throw InternalError("normalized bracket " + f.to_string("A") + " has an exponent not divisible by 4");
  }
}

LaurentPolynomial jones(const ResolvedPD& d) { return jones_from_normalized_bracket(normalized_bracket(d)); }

}  // namespace pk
