#pragma once

// Polynomial invariants and the structural checks that tie homology tables together.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "khoma/homology.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/parallel.hpp"
#include "khoma/polynomial.hpp"
#include "khoma/reidemeister.hpp"

namespace khoma {

namespace detail {

/// census[r][k]: number of states with r one-smoothings and k circles.
inline std::vector<std::vector<std::int64_t>> state_census(const LinkDiagram& d) {
  const int n = d.crossing_count();
  check_state_space(n);
  const int max_k = d.arc_count() + d.free_loops() + 1;
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::vector<std::vector<std::int64_t>>> parts(thread_count() + 1,
                                                           std::vector<std::vector<std::int64_t>>(n + 1, std::vector<std::int64_t>(max_k + 1, 0)));
  const std::size_t used = parallel_ranges(total, [&](std::size_t lo, std::size_t hi, std::size_t slot) {
    for (std::size_t b = lo; b < hi; ++b) {
      const State s{static_cast<std::uint32_t>(b), n};
      parts[slot][s.weight()][resolve_state(d, s).circle_count]++;
    }
  });
  auto census = std::move(parts[0]);
  for (std::size_t p = 1; p < used; ++p)
    for (int r = 0; r <= n; ++r)
      for (int k = 0; k <= max_k; ++k) census[r][k] += parts[p][r][k];
  return census;
}

}  // namespace detail

enum class LESCase { NegativeCrossing, PositiveCrossing };

inline std::string_view to_string(LESCase c) {
  return c == LESCase::NegativeCrossing ? "NegativeCrossing" : "PositiveCrossing";
}

struct LESStrand {
  int j = 0;
  std::int64_t alternating_sum = 0;
  bool bounded = true;  // every term at most the sum of its neighbours
  bool split = true;    // all connecting maps vanish: dim H(D) = dim A + dim C in each degree
  bool pass() const { return alternating_sum == 0 && bounded; }
};

struct LESReport {
  LESCase kind = LESCase::NegativeCrossing;
  int c = 0;
  std::vector<LESStrand> strands;
  bool pass() const {
    return std::all_of(strands.begin(), strands.end(), [](const LESStrand& s) { return s.pass(); });
  }
  bool split() const {
    return std::all_of(strands.begin(), strands.end(), [](const LESStrand& s) { return s.split; });
  }
};

namespace detail {

/// Dimension checks on the sequences ... -> A^i -> B^i -> C^i -> A^{i+1} -> ..., one per j.
template <class FA, class FB, class FC>
std::vector<LESStrand> exactness_strands(const std::set<int>& js, int lo, int hi, FA a_dim, FB b_dim, FC c_dim) {
  std::vector<LESStrand> out;
  for (int j : js) {
    std::vector<std::int64_t> seq;
    for (int i = lo; i <= hi; ++i) {
      seq.push_back(a_dim(i, j));
      seq.push_back(b_dim(i, j));
      seq.push_back(c_dim(i, j));
    }
    LESStrand s;
    s.j = j;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      s.alternating_sum += k % 2 ? -seq[k] : seq[k];
      const std::int64_t left = k ? seq[k - 1] : 0, right = k + 1 < seq.size() ? seq[k + 1] : 0;
      if (seq[k] > left + right) s.bounded = false;
      if (k % 3 == 1 && seq[k] != seq[k - 1] + seq[k + 1]) s.split = false;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// <D> as the state sum of (-q)^r (q + q^-1)^k.
inline LaurentPolynomial kauffman_bracket(const LinkDiagram& d) {
  const auto census = detail::state_census(d);
  LaurentPolynomial out;
  for (std::size_t r = 0; r < census.size(); ++r)
    for (std::size_t k = 0; k < census[r].size(); ++k) {
      if (census[r][k] == 0) continue;
      const LaurentPolynomial term = LaurentPolynomial::monomial(static_cast<int>(r), r % 2 ? -1 : 1) * qdim_pow(static_cast<int>(k));
      out += term * LaurentPolynomial(census[r][k]);
    }
  return out;
}

/// J-hat(D) = (-1)^{n-} q^{n+ - 2 n-} <D>.
inline LaurentPolynomial unnormalized_jones(const LinkDiagram& d) {
  const auto w = writhe_counts(d);
  return LaurentPolynomial::monomial(w.n_plus - 2 * w.n_minus, w.n_minus % 2 ? -1 : 1) * kauffman_bracket(d);
}

/// J(D) = J-hat(D) / (q + q^-1).
inline LaurentPolynomial jones(const LinkDiagram& d) {
  return unnormalized_jones(d).divided_by(LaurentPolynomial::quantum_two());
}

/// Z/p dimensions of an integral table via the universal coefficient theorem.
inline HomologyTable uct_transport(const HomologyTable& t, std::uint64_t p) {
  if (t.ring.kind != RingKind::Integers) fail(ErrorCode::RingMismatch, "uct_transport needs an integral table");
  HomologyTable out{RingSpec::integers_mod(p), {}};
  auto count = [&](const HomologyGroup& g) {
    return static_cast<std::int64_t>(
        std::count_if(g.torsion.begin(), g.torsion.end(), [&](std::int64_t f) { return f % static_cast<std::int64_t>(p) == 0; }));
  };
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, g] : t.entries) {
    keys.insert(k);
    keys.insert({k.first - 1, k.second});
  }
  for (const auto& [i, j] : keys) {
    const std::int64_t dim = t.at(i, j).betti + count(t.at(i, j)) + count(t.at(i + 1, j));
    out.set(i, j, {dim, {}});
  }
  return out;
}

/// Homology of a disjoint union over Q: convolution of the Betti tables.
inline HomologyTable kunneth_product(const HomologyTable& a, const HomologyTable& b) {
  if (a.ring.kind != RingKind::Rationals || b.ring.kind != RingKind::Rationals)
    fail(ErrorCode::RingMismatch, "kunneth_product is defined for tables over Q");
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& [ka, ga] : a.entries)
    for (const auto& [kb, gb] : b.entries) acc[{ka.first + kb.first, ka.second + kb.second}] += ga.betti * gb.betti;
  HomologyTable out{RingSpec::rationals(), {}};
  for (const auto& [k, v] : acc) out.set(k.first, k.second, {v, {}});
  return out;
}

/// The long exact sequence of the resolutions at `crossing`, checked via dimensions over Q.
inline LESReport les_consistency(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    fail(ErrorCode::IndexOutOfRange, "crossing " + std::to_string(crossing) + " does not exist");
  const LinkDiagram d0 = resolve_crossing(d, crossing, 0);
  const LinkDiagram d1 = resolve_crossing(d, crossing, 1);
  const HomologyTable h = khovanov_homology(d);
  const HomologyTable h0 = khovanov_homology(d0);
  const HomologyTable h1 = khovanov_homology(d1);
  LESReport rep;
  const int nm = writhe_counts(d).n_minus;
  // Sequence ... -> A^i -> B^i -> C^i -> A^{i+1} -> ... for each j.
  std::function<std::int64_t(int, int)> a_dim, c_dim;
  if (d.crossings()[crossing].sign < 0) {
    rep.kind = LESCase::NegativeCrossing;
    rep.c = writhe_counts(d0).n_minus - nm;
    const int c = rep.c;
    a_dim = [&h1](int i, int j) { return h1.betti(i, j + 1); };
    c_dim = [&h0, c](int i, int j) { return h0.betti(i - c, j - 3 * c - 1); };
  } else {
    rep.kind = LESCase::PositiveCrossing;
    rep.c = writhe_counts(d1).n_minus - nm;
    const int c = rep.c;
    a_dim = [&h1, c](int i, int j) { return h1.betti(i - c - 1, j - 3 * c - 2); };
    c_dim = [&h0](int i, int j) { return h0.betti(i, j - 1); };
  }
  const int c = rep.c;
  // Range of (i, j) touched by any of the three tables, in D's coordinates.
  std::set<int> js;
  int lo = 0, hi = 0;
  auto widen = [&](int i) { lo = std::min(lo, i), hi = std::max(hi, i); };
  for (const auto& [k, g] : h.entries) js.insert(k.second), widen(k.first);
  for (const auto& [k, g] : h0.entries) {
    if (rep.kind == LESCase::NegativeCrossing) js.insert(k.second + 3 * c + 1), widen(k.first + c);
    else js.insert(k.second + 1), widen(k.first);
  }
  for (const auto& [k, g] : h1.entries) {
    if (rep.kind == LESCase::NegativeCrossing) js.insert(k.second - 1), widen(k.first);
    else js.insert(k.second + 3 * c + 2), widen(k.first + c + 1);
  }
  lo -= 1, hi += 1;
  rep.strands = detail::exactness_strands(js, lo, hi, a_dim, [&h](int i, int j) { return h.betti(i, j); }, c_dim);
  return rep;
}

}  // namespace khoma
