#pragma once

// Independent reference computations used to cross-check the library.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "khoma/fixtures.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/polynomial.hpp"

namespace khoma::testing {

/// Loops through arc labels after pairing them as prescribed, counted by depth-first search.
inline int count_loops(int arcs, const std::vector<std::pair<int, int>>& joins, int free_loops) {
  std::vector<std::vector<int>> adj(arcs + 1);
  for (auto [a, b] : joins) adj[a].push_back(b), adj[b].push_back(a);
  std::vector<bool> seen(arcs + 1, false);
  int loops = free_loops;
  for (int s = 1; s <= arcs; ++s) {
    if (seen[s]) continue;
    ++loops;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
  }
  return loops;
}

/// <D> by the skein recursion <X> = <0-smoothing> - q <1-smoothing>.
inline LaurentPolynomial bracket_by_recursion(const LinkDiagram& d) {
  const auto tuples = d.tuples();
  std::vector<std::pair<int, int>> joins;
  std::function<LaurentPolynomial(std::size_t)> go = [&](std::size_t k) -> LaurentPolynomial {
    if (k == tuples.size()) return qdim_pow(count_loops(d.arc_count(), joins, d.free_loops()));
    const auto& t = tuples[k];
    joins.push_back({t[0], t[1]});
    joins.push_back({t[2], t[3]});
    LaurentPolynomial zero = go(k + 1);
    joins.resize(joins.size() - 2);
    joins.push_back({t[0], t[3]});
    joins.push_back({t[1], t[2]});
    LaurentPolynomial one = go(k + 1);
    joins.resize(joins.size() - 2);
    return zero - LaurentPolynomial::monomial(1) * one;
  };
  return go(0);
}

/// Rank over Q by textbook dense elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c] != 0) {
        mpq_class f = a[r][c] / a[rank][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
      }
    ++rank;
  }
  return rank;
}

inline mpz_class determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) std::swap(a[p], a[c]), det = -det;
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

/// Invariant factors from determinantal divisors: d_k = gcd of k x k minors, factor_k = d_k / d_{k-1}.
inline std::vector<mpz_class> invariant_factors_by_minors(const std::vector<std::vector<long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<mpq_class>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          sub.emplace_back();
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) sub.back().push_back(mpq_class(m[r][c]));
        }
        mpz_class det = abs(determinant(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// P(G) by deletion-contraction, bottoming out at edgeless graphs.
inline LaurentPolynomial chromatic_by_recursion(const Graph& g) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].first == g.edges[e].second) return {};
  if (g.edges.empty()) return LaurentPolynomial::monomial(g.vertex_count);
  return chromatic_by_recursion(delete_edge(g, 0)) - chromatic_by_recursion(contract_edge(g, 0));
}

inline const std::vector<DiagramFixture>& diagram_corpus() {
  static const auto corpus = load_diagram_fixtures(KHOMA_FIXTURES_DIR);
  return corpus;
}

inline const std::vector<GraphFixture>& graph_corpus() {
  static const auto corpus = load_graph_fixtures(KHOMA_FIXTURES_DIR);
  return corpus;
}

inline const DiagramFixture& fixture(const std::string& name) {
  for (const auto& f : diagram_corpus())
    if (f.name == name) return f;
  throw std::runtime_error("no fixture " + name);
}

inline const GraphFixture& graph_fixture(const std::string& name) {
  for (const auto& f : graph_corpus())
    if (f.name == name) return f;
  throw std::runtime_error("no graph fixture " + name);
}

}  // namespace khoma::testing
