#pragma once

// Brute-force state sum kept deliberately separate from the library's sweep:
// every one of the 2^n smoothings is built explicitly and its loops are
// counted with a union-find over edge labels. Polynomials are plain
// exponent -> coefficient maps so no library arithmetic is involved.

#include <map>
#include <numeric>
#include <vector>

#include "pseudoknot/laurent.hpp"
#include "pseudoknot/pd.hpp"

namespace oracle {

using Poly = std::map<int, long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) r[ea + eb] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline Poly naive_bracket(const std::vector<pk::Vertex>& vs) {
  const std::size_t n = vs.size();
  if (n == 0) return {{0, 1}};
  int max_label = 0;
  for (const auto& v : vs)
    for (int e : v.edges) max_label = std::max(max_label, e);

  Poly total;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(max_label) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    int a_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = vs[i].edges;
      if (mask >> i & 1) {
        ++a_count;
        unite(e[0], e[1]);
        unite(e[2], e[3]);
      } else {
        unite(e[0], e[3]);
        unite(e[1], e[2]);
      }
    }
    std::vector<bool> used(parent.size(), false);
    for (const auto& v : vs)
      for (int e : v.edges) used[e] = true;
    int loops = 0;
    for (std::size_t e = 0; e < used.size(); ++e)
      if (used[e] && find(static_cast<int>(e)) == static_cast<int>(e)) ++loops;

    Poly term{{a_count - (static_cast<int>(n) - a_count), 1}};
    for (int i = 1; i < loops; ++i) term = mul(term, {{2, -1}, {-2, -1}});
    for (auto [ex, c] : term) total[ex] += c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

inline pk::LaurentPolynomial to_laurent(const Poly& p) {
  std::vector<std::pair<int, pk::LaurentPolynomial::Coefficient>> terms(p.begin(), p.end());
  return pk::LaurentPolynomial::from_terms(terms);
}

}  // namespace oracle
