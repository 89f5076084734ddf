#pragma once

// Lee's deformation (h, t) = (0, 1): dimensions, canonical generators and the s-invariant.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "khoma/homology.hpp"
#include "khoma/khcomplex.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/planar.hpp"

namespace khoma {

/// Orientation obtained from the diagram's by reversing the components in `reversed`.
struct OrientationChoice {
  std::uint64_t reversed = 0;

  bool contains(int component) const { return (reversed >> component) & 1u; }
  /// Bitmask word over components, e.g. "0110" reverses components 1 and 2.
  static OrientationChoice parse(std::string_view word) {
    if (word.size() > 63) fail(ErrorCode::InvalidArgument, "orientation word too long");
    OrientationChoice o;
    for (std::size_t c = 0; c < word.size(); ++c) {
      if (word[c] == '1') o.reversed |= std::uint64_t{1} << c;
      else if (word[c] != '0') fail(ErrorCode::InvalidArgument, "orientation word must be 0/1: " + std::string(word));
    }
    return o;
  }
  std::string word(int components) const {
    std::string w(components, '0');
    for (int c = 0; c < components; ++c)
      if (contains(c)) w[c] = '1';
    return w;
  }
};

inline void check_orientation(const LinkDiagram& d, OrientationChoice theta) {
  const int k = d.component_count();
  if (k < 64 && (theta.reversed >> k) != 0)
    fail(ErrorCode::ComponentOutOfRange, "orientation reverses a component the diagram does not have");
}

inline ChainComplex lee_complex(const LinkDiagram& d) { return build_complex(d, 0, 1); }

/// Homological degree -> dimension of Lee homology over Q.
inline std::map<int, std::int64_t> lee_homology_dims(const LinkDiagram& d) {
  std::map<int, std::int64_t> out;
  for (const auto& [i, g] : homology_by_degree(lee_complex(d), RingSpec::rationals()))
    if (g.betti) out[i] = g.betti;
  return out;
}

/// Dimensions per homological degree of the theory built from A_{h,t} over Q.
inline std::map<int, std::int64_t> family_homology_dims(const LinkDiagram& d, std::int64_t h, std::int64_t t) {
  std::map<int, std::int64_t> out;
  for (const auto& [i, g] : homology_by_degree(build_complex(d, h, t), RingSpec::rationals()))
    if (g.betti) out[i] = g.betti;
  return out;
}

/// Sign of crossing k once the components in theta are reversed.
inline int crossing_sign(const LinkDiagram& d, int k, OrientationChoice theta) {
  const bool flip = theta.contains(d.under_component(k)) != theta.contains(d.over_component(k));
  return flip ? -d.crossings()[k].sign : d.crossings()[k].sign;
}

/// Positive crossings 0-smoothed, negative ones 1-smoothed, for the orientation theta.
inline State canonical_smoothing(const LinkDiagram& d, OrientationChoice theta) {
  State s{0, d.crossing_count()};
  for (int k = 0; k < d.crossing_count(); ++k)
    if (crossing_sign(d, k, theta) < 0) s.bits |= 1u << k;
  return s;
}

/// 2 * sum over l in E, m not in E of lk(L_l, L_m).
inline int generator_degree(const LinkDiagram& d, OrientationChoice theta) {
  check_orientation(d, theta);
  int sum = 0;
  for (int l = 0; l < d.component_count(); ++l)
    for (int m = 0; m < d.component_count(); ++m)
      if (theta.contains(l) && !theta.contains(m)) sum += linking_number(d, l, m);
  return 2 * sum;
}

/// A chain supported on one state; coefficients indexed by labeling mask.
struct LeeChain {
  int degree = 0;
  State state;
  std::vector<int> groups;  // per circle: 0 labels x + 1, 1 labels x - 1
  std::vector<std::int64_t> coefficients;
};

/// The canonical generator s_theta.
inline LeeChain canonical_cycle(const LinkDiagram& d, OrientationChoice theta, std::string_view outer_hint = "") {
  check_orientation(d, theta);
  LeeChain ch;
  ch.state = canonical_smoothing(d, theta);
  ch.degree = ch.state.weight() - writhe_counts(d).n_minus;
  const PlanarEmbedding emb(d, outer_hint);
  const CircleGeometry g = circle_geometry(d, emb, ch.state, true, theta.reversed);
  const int k = static_cast<int>(g.depth.size());
  for (int c = 0; c < k; ++c) ch.groups.push_back((g.depth[c] + (g.counterclockwise[c] ? 0 : 1)) % 2);
  if (k > 24) fail(ErrorCode::StateSpaceTooLarge, "too many circles");
  ch.coefficients.assign(std::size_t{1} << k, 1);
  // x + 1 = 1 + x and x - 1 = -1 + x: a circle in group 1 labelled 1 contributes -1.
  for (std::uint32_t m = 0; m < ch.coefficients.size(); ++m)
    for (int c = 0; c < k; ++c)
      if (ch.groups[c] == 1 && !((m >> c) & 1u)) ch.coefficients[m] = -ch.coefficients[m];
  return ch;
}

namespace detail {

/// Dense coordinates of `ch` in its chain group of `c`.
inline std::vector<std::int64_t> chain_vector(const ChainComplex& c, const LeeChain& ch) {
  const int t = ch.degree - c.min_degree;
  if (t < 0 || t >= c.slots()) fail(ErrorCode::IndexOutOfRange, "chain lies outside the complex");
  std::vector<std::int64_t> v(c.basis[t].size(), 0);
  for (std::size_t g = 0; g < c.basis[t].size(); ++g)
    if (c.basis[t][g].state == ch.state.bits) v[g] = ch.coefficients.at(c.basis[t][g].mask);
  return v;
}

}  // namespace detail

/// Whether d(ch) = 0 in the Lee complex `c`.
inline bool is_cycle(const ChainComplex& c, const LeeChain& ch) {
  const int t = ch.degree - c.min_degree;
  const auto v = detail::chain_vector(c, ch);
  if (t >= static_cast<int>(c.d.size())) return true;
  std::vector<std::int64_t> image(c.d[t].rows, 0);
  for (const auto& e : c.d[t].entries) image[e.row] += e.value * v[e.col];
  return std::all_of(image.begin(), image.end(), [](std::int64_t x) { return x == 0; });
}

/// Rank in Lee homology of the span of all 2^k canonical generators.
inline std::size_t canonical_span_rank(const LinkDiagram& d, std::string_view outer_hint = "") {
  const int k = d.component_count();
  if (k > 16) fail(ErrorCode::StateSpaceTooLarge, "too many components");
  const ChainComplex c = lee_complex(d);
  std::map<int, std::vector<std::vector<std::int64_t>>> by_degree;
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << k); ++e) {
    const LeeChain ch = canonical_cycle(d, {e}, outer_hint);
    by_degree[ch.degree].push_back(detail::chain_vector(c, ch));
  }
  std::size_t total = 0;
  for (const auto& [deg, vecs] : by_degree) {
    const int t = deg - c.min_degree;
    // Columns: boundaries into slot t, then the generators.
    SparseMatrix<std::int64_t> boundaries(static_cast<int>(c.basis[t].size()), 0);
    if (t > 0) boundaries = c.d[t - 1];
    SparseMatrix<std::int64_t> both = boundaries;
    both.cols = boundaries.cols + static_cast<int>(vecs.size());
    for (std::size_t j = 0; j < vecs.size(); ++j)
      for (std::size_t r = 0; r < vecs[j].size(); ++r)
        if (vecs[j][r]) both.add(static_cast<int>(r), boundaries.cols + static_cast<int>(j), vecs[j][r]);
    total += detail::rank_rational(both) - detail::rank_rational(boundaries);
  }
  return total;
}

struct SInvariantResult {
  int s_min = 0;
  int s_max = 0;
  int s = 0;
  friend bool operator==(const SInvariantResult&, const SInvariantResult&) = default;
};

namespace detail {

/// dim F^k Lee^0 as a function of k, for one q-mod-4 block of the Lee complex.
class FiltrationBlock {
 public:
  FiltrationBlock(const ChainComplex& c, int t0, int block) {
    auto collect = [&](int t, std::vector<int>& index, std::vector<int>& q) {
      if (t < 0 || t >= c.slots()) return;
      index.assign(c.basis[t].size(), -1);
      for (std::size_t g = 0; g < c.basis[t].size(); ++g)
        if (c.block_of(c.q[t][g]) == block) {
          index[g] = static_cast<int>(q.size());
          q.push_back(c.q[t][g]);
        }
    };
    std::vector<int> idx_prev, idx0, idx_next, q_prev, q_next;
    collect(t0 - 1, idx_prev, q_prev);
    collect(t0, idx0, q0_);
    collect(t0 + 1, idx_next, q_next);
    out_ = SparseMatrix<std::int64_t>(static_cast<int>(q_next.size()), static_cast<int>(q0_.size()));
    if (t0 < static_cast<int>(c.d.size()))
      for (const auto& e : c.d[t0].entries)
        if (idx0[e.col] >= 0) out_.add(idx_next[e.row], idx0[e.col], e.value);
    in_ = SparseMatrix<std::int64_t>(static_cast<int>(q0_.size()), static_cast<int>(q_prev.size()));
    if (t0 > 0)
      for (const auto& e : c.d[t0 - 1].entries)
        if (idx_prev[e.col] >= 0) in_.add(idx0[e.row], idx_prev[e.col], e.value);
    boundary_rank_ = rank_rational(in_);
  }

  std::int64_t dim_at(int k) const {
    SparseMatrix<std::int64_t> cols(out_.rows, out_.cols), rows(in_.rows, in_.cols);
    std::int64_t high = 0;
    for (int qv : q0_) high += qv >= k;
    for (const auto& e : out_.entries)
      if (q0_[e.col] >= k) cols.add(e.row, e.col, e.value);
    for (const auto& e : in_.entries)
      if (q0_[e.row] < k) rows.add(e.row, e.col, e.value);
    const auto cycles = high - static_cast<std::int64_t>(rank_rational(cols));
    const auto bounded = static_cast<std::int64_t>(boundary_rank_) - static_cast<std::int64_t>(rank_rational(rows));
    return cycles - bounded;
  }

  const std::vector<int>& levels() const { return q0_; }

 private:
  std::vector<int> q0_;
  SparseMatrix<std::int64_t> out_, in_;
  std::size_t boundary_rank_ = 0;
};

}  // namespace detail

/// s_min, s_max and s from the q-filtration on Lee^0 of a knot diagram.
inline SInvariantResult s_values(const LinkDiagram& d) {
  if (d.component_count() != 1) fail(ErrorCode::NotAKnot, "s is defined for knots");
  const ChainComplex c = lee_complex(d);
  const int t0 = -c.min_degree;
  std::vector<detail::FiltrationBlock> blocks;
  std::vector<int> levels;
  for (int b = 0; b < c.period; ++b) {
    blocks.emplace_back(c, t0, b);
    levels.insert(levels.end(), blocks.back().levels().begin(), blocks.back().levels().end());
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto dim = [&](int k) {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += b.dim_at(k);
    return s;
  };
  const std::int64_t full = dim(levels.front());
  if (full == 0) fail(ErrorCode::InvalidArgument, "Lee^0 vanishes");
  // Largest level with dim F^k >= target; dim is non-increasing in k.
  auto last_level = [&](std::int64_t target) {
    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (dim(levels[mid]) >= target) lo = mid;
      else hi = mid - 1;
    }
    return levels[lo];
  };
  SInvariantResult r;
  r.s_min = last_level(full);
  r.s_max = last_level(1);
  r.s = (r.s_min + r.s_max) / 2;
  return r;
}

/// s = n - r + 1 for a positive diagram, r the circle count of the all-zero smoothing.
inline int s_positive_shortcut(const LinkDiagram& d) {
  if (d.component_count() != 1) fail(ErrorCode::NotAKnot, "s is defined for knots");
  if (!is_positive(d)) fail(ErrorCode::NotPositive, "diagram has a negative crossing");
  const int r = resolve_state(d, State{0, d.crossing_count()}).circle_count;
  return d.crossing_count() - r + 1;
}

}  // namespace khoma
