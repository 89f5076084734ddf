#pragma once

// Homology of chain complexes, one (degree, q-block) at a time.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khoma/khcomplex.hpp"
#include "khoma/polynomial.hpp"
#include "khoma/rings.hpp"
#include "khoma/sparse.hpp"

namespace khoma {

struct HomologyGroup {
  std::int64_t betti = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, ascending

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Nonzero groups keyed by bidegree (i, j).
struct HomologyTable {
  RingSpec ring;
  std::map<std::pair<int, int>, HomologyGroup> entries;

  HomologyGroup at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? HomologyGroup{} : it->second;
  }
  std::int64_t betti(int i, int j) const { return at(i, j).betti; }
  std::int64_t total_rank() const {
    std::int64_t s = 0;
    for (const auto& [k, g] : entries) s += g.betti;
    return s;
  }
  void set(int i, int j, HomologyGroup g) {
    if (g.is_zero()) entries.erase({i, j});
    else entries[{i, j}] = std::move(g);
  }
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

namespace detail {

using IntRow = std::vector<std::pair<int, mpz_class>>;

struct UnitReduction {
  std::size_t units = 0;
  std::vector<IntRow> rest;
};

/// Pivot on all +-1 entries, in machine integers when possible.
inline UnitReduction unit_reduce(const SparseMatrix<std::int64_t>& m) {
  UnitReduction out;
  try {
    Int64Ring zz;
    Eliminator<Int64Ring> el(m, zz);
    out.units = el.eliminate([](std::int64_t v) { return v == 1 || v == -1; });
    for (auto& row : el.leftover()) {
      IntRow r;
      r.reserve(row.size());
      for (auto [c, v] : row) r.push_back({c, mpz_class(static_cast<long>(v))});
      out.rest.push_back(std::move(r));
    }
    return out;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  IntegerRing zz;
  SparseMatrix<mpz_class> big(m.rows, m.cols);
  for (const auto& e : m.entries) big.add(e.row, e.col, mpz_class(static_cast<long>(e.value)));
  Eliminator<IntegerRing> el(big, zz);
  out = UnitReduction{};
  out.units = el.eliminate([&](const mpz_class& v) { return zz.is_unit(v); });
  out.rest = el.leftover();
  return out;
}

inline std::size_t rank_rational(const SparseMatrix<std::int64_t>& m) {
  UnitReduction u = unit_reduce(m);
  if (u.rest.empty()) return u.units;
  RationalField qq;
  SparseMatrix<mpq_class> left(static_cast<int>(u.rest.size()), m.cols);
  for (std::size_t i = 0; i < u.rest.size(); ++i)
    for (const auto& [c, v] : u.rest[i]) left.add(static_cast<int>(i), c, mpq_class(v));
  Eliminator<RationalField> el(left, qq);
  return u.units + el.eliminate([](const mpq_class& v) { return sgn(v) != 0; });
}

inline SmithForm smith_int64(const SparseMatrix<std::int64_t>& m) {
  UnitReduction u = unit_reduce(m);
  SmithForm s;
  s.invariant_factors.assign(u.units, mpz_class(1));
  if (!u.rest.empty()) {
    auto rest = dense_smith_diagonal(densify(u.rest));
    s.invariant_factors.insert(s.invariant_factors.end(), rest.begin(), rest.end());
  }
  s.invariant_factors = normalize_diagonal(std::move(s.invariant_factors));
  return s;
}

struct BlockResult {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;
};

inline BlockResult block_rank(const SparseMatrix<std::int64_t>& m, const RingSpec& ring) {
  BlockResult r;
  if (m.entries.empty()) return r;
  switch (ring.kind) {
    case RingKind::Rationals: r.rank = rank_rational(m); break;
    case RingKind::IntegersMod: {
      PrimeField f(ring.modulus);
      r.rank = rank_over_field(to_ring(m, f), f);
      break;
    }
    case RingKind::Integers: {
      SmithForm s = smith_int64(m);
      r.rank = s.rank();
      for (const auto& f : s.torsion()) {
        if (!f.fits_slong_p()) fail(ErrorCode::Overflow, "torsion coefficient too large");
        r.torsion.push_back(f.get_si());
      }
      break;
    }
  }
  return r;
}

/// Homology of every (slot, block) with nonzero chain group.
inline std::map<std::pair<int, int>, HomologyGroup> block_homology(const ChainComplex& c, const RingSpec& ring) {
  const int slots = c.slots();
  // Local index of every generator inside its block.
  std::vector<std::vector<int>> local(slots);
  std::vector<std::map<int, int>> sizes(slots);
  for (int t = 0; t < slots; ++t) {
    local[t].resize(c.basis[t].size());
    for (std::size_t g = 0; g < c.basis[t].size(); ++g) local[t][g] = sizes[t][c.block_of(c.q[t][g])]++;
  }
  // Split each differential by block.
  struct Task {
    int t, block;
    SparseMatrix<std::int64_t> m;
  };
  std::vector<Task> tasks;
  for (int t = 0; t + 1 < slots; ++t) {
    std::map<int, std::size_t> index;
    for (const auto& [b, n] : sizes[t]) {
      auto it = sizes[t + 1].find(b);
      if (it == sizes[t + 1].end()) continue;
      index[b] = tasks.size();
      tasks.push_back({t, b, SparseMatrix<std::int64_t>(it->second, n)});
    }
    for (const auto& e : c.d[t].entries) {
      const int b = c.block_of(c.q[t][e.col]);
      if (c.block_of(c.q[t + 1][e.row]) != b)
        fail(ErrorCode::InvalidArgument, "differential does not respect the q-grading");
      tasks[index.at(b)].m.add(local[t + 1][e.row], local[t][e.col], e.value);
    }
  }
  auto results = parallel_map<BlockResult>(tasks.size(), [&](std::size_t k) { return block_rank(tasks[k].m, ring); });
  std::map<std::pair<int, int>, std::size_t> out_rank, in_rank;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> torsion;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    out_rank[{tasks[k].t, tasks[k].block}] = results[k].rank;
    in_rank[{tasks[k].t + 1, tasks[k].block}] = results[k].rank;
    if (!results[k].torsion.empty()) torsion[{tasks[k].t + 1, tasks[k].block}] = results[k].torsion;
  }
  std::map<std::pair<int, int>, HomologyGroup> out;
  for (int t = 0; t < slots; ++t)
    for (const auto& [b, n] : sizes[t]) {
      HomologyGroup g;
      g.betti = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(out_rank[{t, b}]) -
                static_cast<std::int64_t>(in_rank[{t, b}]);
      if (auto it = torsion.find({t, b}); it != torsion.end()) g.torsion = it->second;
      if (!g.is_zero()) out[{t, b}] = std::move(g);
    }
  return out;
}

}  // namespace detail

/// Bigraded homology of a graded complex.
inline HomologyTable homology_table(const ChainComplex& c, const RingSpec& ring, bool check = true) {
  if (!c.graded()) fail(ErrorCode::NotGraded, "filtered complex has no bigraded homology table");
  if (check && !check_d_squared(c)) fail(ErrorCode::DifferentialNotSquareZero, "d^2 != 0");
  HomologyTable t{ring, {}};
  for (auto& [key, g] : detail::block_homology(c, ring)) t.entries[{c.min_degree + key.first, key.second}] = std::move(g);
  return t;
}

/// Homology collapsed over q; works for filtered complexes too.
inline std::map<int, HomologyGroup> homology_by_degree(const ChainComplex& c, const RingSpec& ring, bool check = true) {
  if (check && !check_d_squared(c)) fail(ErrorCode::DifferentialNotSquareZero, "d^2 != 0");
  std::map<int, HomologyGroup> out;
  for (auto& [key, g] : detail::block_homology(c, ring)) {
    auto& slot = out[c.min_degree + key.first];
    slot.betti += g.betti;
    slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
    std::sort(slot.torsion.begin(), slot.torsion.end());
  }
  return out;
}

/// Kh(D) = H(C(D)) for the standard algebra V.
inline HomologyTable khovanov_homology(const LinkDiagram& d, const RingSpec& ring = RingSpec::rationals()) {
  return homology_table(build_complex(d), ring);
}

/// Sum of (-1)^i q^j betti(i, j).
inline LaurentPolynomial graded_euler_characteristic(const HomologyTable& t) {
  LaurentPolynomial p;
  for (const auto& [k, g] : t.entries) p.add_term(k.second, k.first % 2 == 0 ? g.betti : -g.betti);
  return p;
}

inline LaurentPolynomial graded_euler_characteristic(const ChainComplex& c) { return euler_characteristic(c); }

}  // namespace khoma
