#pragma once

// Chromatic graph homology: the cube over edge subsets with one tensor factor per component.

#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "khoma/khcomplex.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/polynomial.hpp"

namespace khoma {

/// Vertices are 0-based internally; the text format numbers them from 1.
struct Graph {
  int vertex_count = 1;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Lines `v <count>` and `e <u> <w>`; `#` starts a comment.
inline Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_vertices = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<long long, long long>> raw;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    const std::string where = " on line " + std::to_string(line_no);
    if (tag == "v") {
      long long n;
      if (have_vertices || !(ls >> n) || n < 1 || n > 1000000) fail(ErrorCode::Malformed, "bad vertex line" + where);
      g.vertex_count = static_cast<int>(n);
      have_vertices = true;
    } else if (tag == "e") {
      long long u, w;
      if (!have_vertices || !(ls >> u >> w)) fail(ErrorCode::Malformed, "bad edge line" + where);
      raw.push_back({u, w});
    } else {
      fail(ErrorCode::Malformed, "unknown record '" + tag + "'" + where);
    }
    std::string extra;
    if (ls >> extra) fail(ErrorCode::Malformed, "trailing text" + where);
  }
  if (!have_vertices) fail(ErrorCode::Malformed, "missing `v <count>` line");
  for (auto [u, w] : raw) {
    if (u < 1 || u > g.vertex_count || w < 1 || w > g.vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge endpoint outside 1.." + std::to_string(g.vertex_count));
    g.edges.push_back({static_cast<int>(u - 1), static_cast<int>(w - 1)});
  }
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "v " + std::to_string(g.vertex_count) + "\n";
  for (auto [u, w] : g.edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(w + 1) + "\n";
  return out;
}

inline void check_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.edge_count()) fail(ErrorCode::EdgeNotFound, "graph has no edge " + std::to_string(e));
}

inline Graph delete_edge(const Graph& g, int e) {
  check_edge(g, e);
  Graph h = g;
  h.edges.erase(h.edges.begin() + e);
  return h;
}

/// Identify the endpoints of e and drop it; parallel edges become loops and multi-edges stay.
inline Graph contract_edge(const Graph& g, int e) {
  check_edge(g, e);
  auto [a, b] = g.edges[e];
  if (a == b) return delete_edge(g, e);
  const int keep = std::min(a, b), gone = std::max(a, b);
  auto relabel = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  Graph h;
  h.vertex_count = g.vertex_count - 1;
  for (int k = 0; k < g.edge_count(); ++k)
    if (k != e) h.edges.push_back({relabel(g.edges[k].first), relabel(g.edges[k].second)});
  return h;
}

/// Component of every vertex in the spanning subgraph of the edges in `bits`, numbered by least vertex.
inline Smoothing spanning_components(const Graph& g, std::uint32_t bits) {
  detail::UnionFind uf(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e)
    if ((bits >> e) & 1u) uf.unite(g.edges[e].first, g.edges[e].second);
  return smoothing_from_classes(uf, g.vertex_count);
}

/// P(G) = sum over edge subsets of (-1)^r lambda^k.
inline LaurentPolynomial chromatic_polynomial(const Graph& g) {
  check_state_space(g.edge_count());
  LaurentPolynomial p;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.edge_count()); ++b) {
    const auto bits = static_cast<std::uint32_t>(b);
    p.add_term(spanning_components(g, bits).circle_count, std::popcount(bits) % 2 ? -1 : 1);
  }
  return p;
}

/// Proper colourings with m colours, by enumeration.
inline std::int64_t count_colourings(const Graph& g, int m) {
  std::int64_t total = 0;
  std::vector<int> colour(g.vertex_count, 0);
  while (true) {
    bool ok = true;
    for (auto [u, w] : g.edges) ok = ok && colour[u] != colour[w];
    total += ok;
    int v = 0;
    while (v < g.vertex_count && ++colour[v] == m) colour[v++] = 0;
    if (v == g.vertex_count) break;
  }
  return total;
}

inline CubeShape graph_cube(const Graph& g) {
  check_state_space(g.edge_count());
  if (g.edge_count() > 24) fail(ErrorCode::StateSpaceTooLarge, "too many edges to build the cube");
  if (g.vertex_count > 255) fail(ErrorCode::StateSpaceTooLarge, "too many vertices");
  CubeShape c;
  c.n = g.edge_count();
  c.elements = g.vertex_count;
  c.i_shift = 0;
  // R_alpha = R^{k_alpha} with deg 1 = 0 and deg x = -2, so the differential preserves j.
  c.j_per_r = 0;
  c.j_per_circle = -1;
  c.j_shift = 0;
  for (auto [u, w] : g.edges) c.probes.push_back({u, w});
  c.circle_table.resize(c.state_count() * c.elements);
  c.circle_counts.resize(c.state_count());
  for (std::size_t b = 0; b < c.state_count(); ++b) {
    const auto s = spanning_components(g, static_cast<std::uint32_t>(b));
    c.circle_counts[b] = static_cast<std::uint8_t>(s.circle_count);
    std::copy(s.circle_of_element.begin(), s.circle_of_element.end(), c.circle_table.begin() + b * c.elements);
  }
  return c;
}

/// Graded dimension of R: 1 + q^-2.
inline LaurentPolynomial graph_algebra_qdim() { return LaurentPolynomial(1) + LaurentPolynomial::monomial(-2); }

inline ChainComplex graph_complex(const Graph& g, std::int64_t h = 0, std::int64_t t = 0) {
  return build_cube_complex(graph_cube(g), IntFrobenius::from_ht(h, t));
}

template <class Ring>
ChainComplex graph_complex(const Graph& g, const FrobeniusAlgebra<Ring>& alg) {
  return build_cube_complex(graph_cube(g), integral_structure(alg));
}

inline HomologyTable graph_homology(const Graph& g, const RingSpec& ring = RingSpec::rationals()) {
  return homology_table(graph_complex(g), ring);
}

struct DeletionContractionReport {
  int edge = 0;
  std::vector<LESStrand> strands;
  bool pass() const {
    return std::all_of(strands.begin(), strands.end(), [](const LESStrand& s) { return s.pass(); });
  }
};

/// Dimension checks on ... -> H^{i-1,j}(G/e) -> H^{i,j}(G) -> H^{i,j}(G-e) -> H^{i,j}(G/e) -> ...
inline DeletionContractionReport deletion_contraction_check(const Graph& g, int e) {
  check_edge(g, e);
  const HomologyTable hg = graph_homology(g);
  const HomologyTable hd = graph_homology(delete_edge(g, e));
  const HomologyTable hc = graph_homology(contract_edge(g, e));
  std::set<int> js;
  int lo = 0, hi = 0;
  auto note = [&](int i, int j) {
    js.insert(j);
    lo = std::min(lo, i), hi = std::max(hi, i);
  };
  for (const auto& [k, v] : hg.entries) note(k.first, k.second);
  for (const auto& [k, v] : hd.entries) note(k.first, k.second);
  for (const auto& [k, v] : hc.entries) note(k.first + 1, k.second);
  DeletionContractionReport rep;
  rep.edge = e;
  rep.strands = detail::exactness_strands(
      js, lo - 1, hi + 1, [&](int i, int j) { return hc.betti(i - 1, j); }, [&](int i, int j) { return hg.betti(i, j); },
      [&](int i, int j) { return hd.betti(i, j); });
  return rep;
}

}  // namespace khoma
