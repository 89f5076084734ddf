#pragma once

// The cube of resolutions and its chain complex. The cube is described abstractly (per state, a
// partition of "elements" into circles) so links and graphs share one builder.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "khoma/frobenius.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/parallel.hpp"
#include "khoma/polynomial.hpp"
#include "khoma/sparse.hpp"

namespace khoma {

/// sign(zeta) = (-1)^(number of 1s left of the star). The star is `*` or `⋆`.
inline int edge_sign(std::string_view zeta) {
  int ones = 0, stars = 0;
  std::size_t i = 0;
  while (i < zeta.size()) {
    if (zeta.substr(i, 3) == "\xE2\x8B\x86") {
      ++stars;
      i += 3;
      continue;
    }
    const char ch = zeta[i++];
    if (ch == '*') ++stars;
    else if (ch == '1') ones += stars == 0;
    else if (ch != '0') fail(ErrorCode::MalformedEdge, "bad character in edge word " + std::string(zeta));
  }
  if (stars != 1) fail(ErrorCode::MalformedEdge, "edge word needs exactly one star: " + std::string(zeta));
  return ones % 2 ? -1 : +1;
}

struct EdgeArrow {
  State tail;
  int coordinate = 0;
  State head() const { return tail.flipped(coordinate); }
  int sign() const { return std::popcount(tail.bits & ((1u << coordinate) - 1u)) % 2 ? -1 : +1; }
};

inline EdgeArrow parse_edge(std::string_view zeta) {
  edge_sign(zeta);
  EdgeArrow e;
  std::string word;
  for (std::size_t i = 0; i < zeta.size();) {
    if (zeta.substr(i, 3) == "\xE2\x8B\x86") {
      e.coordinate = static_cast<int>(word.size());
      word += '0';
      i += 3;
    } else if (zeta[i] == '*') {
      e.coordinate = static_cast<int>(word.size());
      word += '0';
      ++i;
    } else {
      word += zeta[i++];
    }
  }
  e.tail = State::from_word(word);
  return e;
}

/// Structure constants of A_{h,t} with integer h, t.
struct IntFrobenius {
  std::int64_t h = 0, t = 0;
  std::array<std::array<std::array<std::int64_t, 2>, 2>, 2> mult{}, comult{};

  static IntFrobenius from_ht(std::int64_t h, std::int64_t t) {
    IntFrobenius a{h, t, {}, {}};
    a.mult[0][0] = {1, 0};
    a.mult[0][1] = {0, 1};
    a.mult[1][0] = {0, 1};
    a.mult[1][1] = {t, h};
    a.comult[0] = {{{-h, 1}, {1, 0}}};
    a.comult[1] = {{{t, 0}, {0, 1}}};
    return a;
  }
  /// 0 when graded; otherwise q is only preserved modulo this.
  int period() const { return h != 0 ? 2 : (t != 0 ? 4 : 0); }
};

namespace detail {
inline std::int64_t integral(const RationalField&, const mpq_class& v) {
  if (v.get_den() != 1 || !v.get_num().fits_slong_p())
    fail(ErrorCode::InvalidArgument, "complexes need integral h and t, got " + v.get_str());
  return v.get_num().get_si();
}
inline std::int64_t integral(const IntegerRing&, const mpz_class& v) {
  if (!v.fits_slong_p()) fail(ErrorCode::Overflow, "h or t too large");
  return v.get_si();
}
inline std::int64_t integral(const PrimeField&, std::uint64_t v) { return static_cast<std::int64_t>(v); }
}  // namespace detail

template <class Ring>
IntFrobenius integral_structure(const FrobeniusAlgebra<Ring>& a) {
  return IntFrobenius::from_ht(detail::integral(a.ring, a.h), detail::integral(a.ring, a.t));
}

/// Abstract cube: for every state, the partition of elements into circles, plus the two probe
/// elements whose circles an edge along each coordinate joins or separates.
struct CubeShape {
  int n = 0;
  int elements = 0;
  std::vector<std::array<int, 2>> probes;
  // Gradings: i = r + i_shift, j = deg + j_per_r * r + j_per_circle * k + j_shift.
  int i_shift = 0;
  int j_per_r = 1;
  int j_per_circle = 0;
  int j_shift = 0;
  std::vector<std::uint8_t> circle_table;  // state bits * elements + element -> circle
  std::vector<std::uint8_t> circle_counts;

  int circle(std::uint32_t bits, int element) const { return circle_table[std::size_t{bits} * elements + element]; }
  int circle_count(std::uint32_t bits) const { return circle_counts[bits]; }
  std::size_t state_count() const { return std::size_t{1} << n; }
};

/// Cube of a link diagram. Elements: arcs (label - 1), then free loops.
inline CubeShape link_cube(const LinkDiagram& d) {
  check_state_space(d.crossing_count());
  if (d.crossing_count() > 24) fail(ErrorCode::StateSpaceTooLarge, "too many crossings to build the cube");
  CubeShape c;
  c.n = d.crossing_count();
  c.elements = d.arc_count() + d.free_loops();
  if (c.elements > 255) fail(ErrorCode::StateSpaceTooLarge, "too many circles");
  const auto w = writhe_counts(d);
  c.i_shift = -w.n_minus;
  c.j_per_r = 1;
  c.j_shift = w.n_plus - 2 * w.n_minus;
  for (const auto& x : d.crossings()) c.probes.push_back({x.arcs[0] - 1, x.arcs[2] - 1});
  c.circle_table.resize(c.state_count() * c.elements);
  c.circle_counts.resize(c.state_count());
  parallel_ranges(c.state_count(), [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t b = lo; b < hi; ++b) {
      Smoothing s = resolve_state(d, State{static_cast<std::uint32_t>(b), c.n});
      c.circle_counts[b] = static_cast<std::uint8_t>(s.circle_count);
      std::copy(s.circle_of_element.begin(), s.circle_of_element.end(), c.circle_table.begin() + b * c.elements);
    }
  });
  return c;
}

struct Generator {
  std::uint32_t state = 0;
  std::uint32_t mask = 0;  // bit c set: circle c carries x
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Chain complex of free modules with integer-coded differentials. Degree slot t holds
/// homological degree min_degree + t.
struct ChainComplex {
  int period = 0;  // 0: bigraded. Otherwise q is a filtration, preserved modulo `period`.
  int min_degree = 0;
  std::vector<std::vector<Generator>> basis;
  std::vector<std::vector<int>> q;
  std::vector<SparseMatrix<std::int64_t>> d;  // d[t]: slot t -> slot t + 1; rows index the target

  bool graded() const { return period == 0; }
  int slots() const { return static_cast<int>(basis.size()); }
  int max_degree() const { return min_degree + slots() - 1; }
  std::size_t dimension(int degree) const {
    const int t = degree - min_degree;
    return (t < 0 || t >= slots()) ? 0 : basis[t].size();
  }
  std::size_t total_dimension() const {
    std::size_t s = 0;
    for (const auto& b : basis) s += b.size();
    return s;
  }
  /// Key under which d is block diagonal.
  int block_of(int qv) const {
    if (period == 0) return qv;
    return ((qv % period) + period) % period;
  }
};

struct BuildOptions {
  /// Negate the edge leaving `flip_tail` along `flip_coordinate` (deliberate corruption for tests).
  std::optional<std::pair<std::uint32_t, int>> flip_edge;
};

namespace detail {

enum class EdgeKind { Merge, Split, Identity };

struct EdgePlan {
  EdgeKind kind;
  int a, b;              // source circles (merge) / source circle (split: a)
  int c1, c2;            // target circle (merge: c1) / first and second factors (split)
  std::vector<int> map;  // source circle -> target circle for unaffected circles, -1 otherwise
};

inline EdgePlan plan_edge(const CubeShape& cube, std::uint32_t tail, int coord) {
  const std::uint32_t head = tail | (1u << coord);
  const int p0 = cube.probes[coord][0], p1 = cube.probes[coord][1];
  EdgePlan e{};
  const int k = cube.circle_count(tail);
  e.map.assign(k, -1);
  std::vector<int> rep(k, -1);
  for (int el = 0; el < cube.elements; ++el) {
    int c = cube.circle(tail, el);
    if (rep[c] < 0) rep[c] = el;
  }
  const int sa = cube.circle(tail, p0), sb = cube.circle(tail, p1);
  const int ta = cube.circle(head, p0), tb = cube.circle(head, p1);
  if (sa != sb) {
    e.kind = EdgeKind::Merge;
    e.a = sa, e.b = sb, e.c1 = ta;
  } else if (ta != tb) {
    e.kind = EdgeKind::Split;
    e.a = sa, e.c1 = std::min(ta, tb), e.c2 = std::max(ta, tb);
  } else {
    e.kind = EdgeKind::Identity;
  }
  for (int c = 0; c < k; ++c) {
    if (e.kind == EdgeKind::Merge && (c == e.a || c == e.b)) continue;
    if (e.kind == EdgeKind::Split && c == e.a) continue;
    e.map[c] = cube.circle(head, rep[c]);
  }
  return e;
}

/// Images of a tail generator: (head mask, coefficient) pairs.
template <class Out>
void apply_edge(const EdgePlan& e, const IntFrobenius& alg, std::uint32_t mask, Out&& out) {
  std::uint32_t base = 0;
  for (std::size_t c = 0; c < e.map.size(); ++c)
    if (e.map[c] >= 0 && ((mask >> c) & 1u)) base |= 1u << e.map[c];
  switch (e.kind) {
    case EdgeKind::Identity: out(base, 1); break;
    case EdgeKind::Merge: {
      const int la = (mask >> e.a) & 1u, lb = (mask >> e.b) & 1u;
      for (int o = 0; o < 2; ++o)
        if (alg.mult[la][lb][o] != 0) out(base | (static_cast<std::uint32_t>(o) << e.c1), alg.mult[la][lb][o]);
      break;
    }
    case EdgeKind::Split: {
      const int la = (mask >> e.a) & 1u;
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v)
          if (alg.comult[la][u][v] != 0)
            out(base | (static_cast<std::uint32_t>(u) << e.c1) | (static_cast<std::uint32_t>(v) << e.c2),
                alg.comult[la][u][v]);
      break;
    }
  }
}

}  // namespace detail

/// Build the complex of a cube with the integral Frobenius algebra `alg`.
inline ChainComplex build_cube_complex(const CubeShape& cube, const IntFrobenius& alg, const BuildOptions& opt = {}) {
  ChainComplex cx;
  cx.period = alg.period();
  cx.min_degree = cube.i_shift;
  const int n = cube.n;
  cx.basis.assign(n + 1, {});
  cx.q.assign(n + 1, {});
  std::vector<std::uint32_t> offset(cube.state_count());
  for (std::uint64_t idx = 0; idx < cube.state_count(); ++idx) {
    const State s = state_at(n, idx);
    const int r = s.weight();
    const int k = cube.circle_count(s.bits);
    offset[s.bits] = static_cast<std::uint32_t>(cx.basis[r].size());
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
      cx.basis[r].push_back({s.bits, m});
      const int deg = k - 2 * std::popcount(m);
      cx.q[r].push_back(deg + cube.j_per_r * r + cube.j_per_circle * k + cube.j_shift);
    }
  }
  cx.d.resize(n);
  for (int r = 0; r < n; ++r) {
    // Tail states of weight r, in lex order.
    std::vector<std::uint32_t> tails;
    for (std::size_t g = 0; g < cx.basis[r].size(); ++g)
      if (cx.basis[r][g].mask == 0) tails.push_back(cx.basis[r][g].state);
    using Entry = SparseMatrix<std::int64_t>::Entry;
    std::vector<std::vector<Entry>> parts(thread_count() + 1);
    const std::size_t used = parallel_ranges(
        tails.size(),
        [&](std::size_t lo, std::size_t hi, std::size_t slot) {
          auto& out = parts[slot];
          for (std::size_t ti = lo; ti < hi; ++ti) {
            const std::uint32_t tail = tails[ti];
            const int k = cube.circle_count(tail);
            for (int c = 0; c < n; ++c) {
              if ((tail >> c) & 1u) continue;
              const std::uint32_t head = tail | (1u << c);
              int sign = std::popcount(tail & ((1u << c) - 1u)) % 2 ? -1 : +1;
              if (opt.flip_edge && opt.flip_edge->first == tail && opt.flip_edge->second == c) sign = -sign;
              const auto plan = detail::plan_edge(cube, tail, c);
              for (std::uint32_t m = 0; m < (1u << k); ++m)
                detail::apply_edge(plan, alg, m, [&](std::uint32_t hm, std::int64_t coef) {
                  out.push_back({static_cast<int>(offset[head] + hm), static_cast<int>(offset[tail] + m), sign * coef});
                });
            }
          }
        },
        16);
    auto& mat = cx.d[r];
    mat.rows = static_cast<int>(cx.basis[r + 1].size());
    mat.cols = static_cast<int>(cx.basis[r].size());
    for (std::size_t s = 0; s < used; ++s) mat.entries.insert(mat.entries.end(), parts[s].begin(), parts[s].end());
  }
  return cx;
}

template <class Ring>
ChainComplex build_complex(const LinkDiagram& d, const FrobeniusAlgebra<Ring>& alg, const BuildOptions& opt = {}) {
  return build_cube_complex(link_cube(d), integral_structure(alg), opt);
}

inline ChainComplex build_complex(const LinkDiagram& d, std::int64_t h = 0, std::int64_t t = 0,
                                  const BuildOptions& opt = {}) {
  return build_cube_complex(link_cube(d), IntFrobenius::from_ht(h, t), opt);
}

/// The map V_tail -> V_head of one cube edge, without its sign. Rows index head labelings.
template <class Ring>
SparseMatrix<typename Ring::value_type> edge_map(const FrobeniusAlgebra<Ring>& alg, const LinkDiagram& d,
                                                 std::string_view zeta) {
  const EdgeArrow e = parse_edge(zeta);
  if (e.tail.n != d.crossing_count()) fail(ErrorCode::MalformedEdge, "edge word length does not match diagram");
  const CubeShape cube = link_cube(d);
  const auto plan = detail::plan_edge(cube, e.tail.bits, e.coordinate);
  const IntFrobenius ia = integral_structure(alg);
  const int kt = cube.circle_count(e.tail.bits), kh = cube.circle_count(e.head().bits);
  SparseMatrix<typename Ring::value_type> m(1 << kh, 1 << kt);
  for (std::uint32_t mask = 0; mask < (1u << kt); ++mask)
    detail::apply_edge(plan, ia, mask, [&](std::uint32_t hm, std::int64_t coef) {
      m.add(static_cast<int>(hm), static_cast<int>(mask), alg.ring.from_int(coef));
    });
  return canonicalize(std::move(m), alg.ring);
}

/// Convert integer coefficients into `ring`.
template <class Ring>
SparseMatrix<typename Ring::value_type> to_ring(const SparseMatrix<std::int64_t>& m, const Ring& ring) {
  SparseMatrix<typename Ring::value_type> out(m.rows, m.cols);
  out.entries.reserve(m.entries.size());
  for (const auto& e : m.entries) out.add(e.row, e.col, ring.from_int(e.value));
  return canonicalize(std::move(out), ring);
}

/// d^{i+1} d^i = 0 for all i, computed in `ring`.
template <class Ring>
bool check_d_squared(const ChainComplex& c, const Ring& ring) {
  for (int t = 0; t + 1 < static_cast<int>(c.d.size()); ++t) {
    auto prod = multiply(to_ring(c.d[t + 1], ring), to_ring(c.d[t], ring), ring);
    if (!prod.entries.empty()) return false;
  }
  return true;
}

inline bool check_d_squared(const ChainComplex& c) {
  Int64Ring zz;
  for (int t = 0; t + 1 < static_cast<int>(c.d.size()); ++t)
    if (!multiply(c.d[t + 1], c.d[t], zz).entries.empty()) return false;
  return true;
}

/// Sum over generators of (-1)^i q^j.
inline LaurentPolynomial euler_characteristic(const ChainComplex& c) {
  LaurentPolynomial p;
  for (int t = 0; t < c.slots(); ++t) {
    const int i = c.min_degree + t;
    for (int qv : c.q[t]) p.add_term(qv, i % 2 == 0 ? 1 : -1);
  }
  return p;
}

/// Graded dimension of the chain group in homological degree i.
inline GradedDimension chain_qdim(const ChainComplex& c, int degree) {
  GradedDimension g;
  const int t = degree - c.min_degree;
  if (t < 0 || t >= c.slots()) return g;
  for (int qv : c.q[t]) g.add(qv, 1);
  return g;
}

/// Labeling word of a generator, e.g. "1xx" (aligned with circle order).
inline std::string labeling(const Generator& g, int circles) {
  std::string s;
  for (int c = 0; c < circles; ++c) s += ((g.mask >> c) & 1u) ? 'x' : '1';
  return s;
}

/// Stable text dump: per (i, j) block the basis, then the nonzero matrix triples of each d^i.
inline std::string debug_dump(const ChainComplex& c, const CubeShape& cube) {
  std::ostringstream os;
  for (int t = 0; t < c.slots(); ++t) {
    const int i = c.min_degree + t;
    std::vector<std::size_t> order(c.basis[t].size());
    for (std::size_t g = 0; g < order.size(); ++g) order[g] = g;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.q[t][a] > c.q[t][b]; });
    int current = INT32_MIN;
    for (std::size_t g : order) {
      if (c.q[t][g] != current) {
        current = c.q[t][g];
        os << "basis i=" << i << " j=" << current << "\n";
      }
      const auto& gen = c.basis[t][g];
      os << "  " << g << " " << State{gen.state, cube.n}.word() << " "
         << labeling(gen, cube.circle_count(gen.state)) << "\n";
    }
  }
  for (std::size_t t = 0; t < c.d.size(); ++t) {
    os << "d i=" << c.min_degree + static_cast<int>(t) << " " << c.d[t].rows << "x" << c.d[t].cols << "\n";
    auto entries = c.d[t].entries;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    for (const auto& e : entries) os << "  " << e.row << " " << e.col << " " << e.value << "\n";
  }
  return os.str();
}

}  // namespace khoma
