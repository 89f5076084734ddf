#pragma once

// Exact sparse linear algebra: rank over a field and Smith normal form over Z. Elimination first
// uses unit pivots chosen Markowitz-style; only what survives goes through the dense phase.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "khoma/rings.hpp"

namespace khoma {

/// Machine integers with overflow checks; used for the integer-coded differentials.
struct Int64Ring {
  using value_type = std::int64_t;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return v == 1 || v == -1; }
  value_type inverse(value_type v) const { return v; }
  value_type add(value_type a, value_type b) const {
    value_type r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow");
    return r;
  }
  value_type sub(value_type a, value_type b) const {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow");
    return r;
  }
  value_type mul(value_type a, value_type b) const {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 overflow");
    return r;
  }
  value_type neg(value_type a) const { return sub(0, a); }
  void sub_mul(value_type& a, value_type b, value_type c) const { a = sub(a, mul(b, c)); }
};

template <class V>
struct SparseMatrix {
  struct Entry {
    int row;
    int col;
    V value;
  };

  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c) {}

  void add(int r, int c, V v) { entries.push_back({r, c, std::move(v)}); }
  std::size_t nonzeros() const { return entries.size(); }
};

/// Sum duplicate coordinates and drop zeros; entries end up sorted by (row, col).
template <class Ring>
SparseMatrix<typename Ring::value_type> canonicalize(SparseMatrix<typename Ring::value_type> m, const Ring& ring) {
  using E = typename SparseMatrix<typename Ring::value_type>::Entry;
  std::sort(m.entries.begin(), m.entries.end(),
            [](const E& a, const E& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  std::vector<E> out;
  for (auto& e : m.entries) {
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col) out.back().value = ring.add(out.back().value, e.value);
    else out.push_back(std::move(e));
  }
  std::erase_if(out, [&](const E& e) { return ring.is_zero(e.value); });
  m.entries = std::move(out);
  return m;
}

/// A * B (A is rows_a x k, B is k x cols_b), canonicalized.
template <class Ring>
SparseMatrix<typename Ring::value_type> multiply(const SparseMatrix<typename Ring::value_type>& a,
                                                 const SparseMatrix<typename Ring::value_type>& b, const Ring& ring) {
  using V = typename Ring::value_type;
  std::vector<std::vector<std::pair<int, V>>> b_rows(b.rows);
  for (const auto& e : b.entries) b_rows[e.row].push_back({e.col, e.value});
  SparseMatrix<V> out(a.rows, b.cols);
  for (const auto& e : a.entries)
    for (const auto& [c, v] : b_rows[e.col]) out.add(e.row, c, ring.mul(e.value, v));
  return canonicalize(std::move(out), ring);
}

namespace detail {

/// Row-oriented sparse elimination over `Ring`.
template <class Ring>
class Eliminator {
 public:
  using V = typename Ring::value_type;
  using Row = std::vector<std::pair<int, V>>;

  Eliminator(const SparseMatrix<V>& m, const Ring& ring) : ring_(ring), rows_(m.rows), col_rows_(m.cols) {
    auto c = canonicalize<Ring>(m, ring);
    for (auto& e : c.entries) rows_[e.row].push_back({e.col, std::move(e.value)});
    for (int r = 0; r < m.rows; ++r)
      for (const auto& [col, v] : rows_[r]) col_rows_[col].push_back(r);
    alive_.assign(m.rows, true);
  }

  /// Pivot on entries satisfying `usable` until none is left. Returns the number of pivots.
  template <class Pred>
  int eliminate(Pred usable) {
    std::set<std::pair<std::size_t, int>> queue;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
      if (alive_[r] && has_usable(r, usable)) queue.insert({rows_[r].size(), r});
    int pivots = 0;
    while (!queue.empty()) {
      const int pr = queue.begin()->second;
      queue.erase(queue.begin());
      // Among usable entries of the pivot row, pick the sparsest column.
      int best = -1;
      std::size_t best_count = SIZE_MAX;
      for (std::size_t i = 0; i < rows_[pr].size(); ++i) {
        if (!usable(rows_[pr][i].second)) continue;
        const std::size_t cnt = col_rows_[rows_[pr][i].first].size();
        if (cnt < best_count) best_count = cnt, best = static_cast<int>(i);
      }
      const int pc = rows_[pr][best].first;
      const V inv = ring_.inverse(rows_[pr][best].second);
      alive_[pr] = false;
      ++pivots;
      for (int r : col_rows_[pc]) {
        if (r == pr || !alive_[r]) continue;
        auto it = find(r, pc);
        if (it == rows_[r].end()) continue;
        const bool queued = queue.erase({rows_[r].size(), r}) > 0;
        (void)queued;
        const V factor = ring_.mul(it->second, inv);
        axpy(r, factor, pr);
        if (has_usable(r, usable)) queue.insert({rows_[r].size(), r});
      }
      col_rows_[pc].clear();
      rows_[pr].clear();
    }
    return pivots;
  }

  /// Rows that have not been used as pivots and are nonzero.
  std::vector<Row> leftover() const {
    std::vector<Row> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (alive_[r] && !rows_[r].empty()) out.push_back(rows_[r]);
    return out;
  }

 private:
  template <class Pred>
  bool has_usable(int r, Pred& usable) const {
    for (const auto& [c, v] : rows_[r])
      if (usable(v)) return true;
    return false;
  }

  typename Row::iterator find(int r, int col) {
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it : row.end();
  }

  // row r -= factor * row p
  void axpy(int r, const V& factor, int p) {
    const Row& src = rows_[p];
    Row& dst = rows_[r];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        out.push_back(std::move(dst[i++]));
      } else if (i >= dst.size() || src[j].first < dst[i].first) {
        out.push_back({src[j].first, ring_.neg(ring_.mul(factor, src[j].second))});
        col_rows_[src[j].first].push_back(r);
        ++j;
      } else {
        V v = std::move(dst[i].second);
        ring_.sub_mul(v, factor, src[j].second);
        if (!ring_.is_zero(v)) out.push_back({dst[i].first, std::move(v)});
        ++i, ++j;
      }
    }
    dst = std::move(out);
  }

  Ring ring_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<bool> alive_;
};

/// Dense Smith normal form diagonal (not yet normalised) of a small integer matrix.
inline std::vector<mpz_class> dense_smith_diagonal(std::vector<std::vector<mpz_class>> a) {
  std::vector<mpz_class> diag;
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < m && t < n) {
    // Minimal-absolute-value pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a[i][j]) != 0 && (pi == m || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) pi = i, pj = j;
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

/// Turn a diagonal into invariant factors d1 | d2 | ...
inline std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

template <class Row>
std::vector<std::vector<mpz_class>> densify(const std::vector<Row>& rows) {
  std::vector<int> cols;
  for (const auto& r : rows)
    for (const auto& e : r) cols.push_back(e.first);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<mpz_class>> a(rows.size(), std::vector<mpz_class>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) a[i][std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()] = v;
  return a;
}

inline bool all_integral(const SparseMatrix<mpq_class>& m) {
  return std::all_of(m.entries.begin(), m.entries.end(), [](const auto& e) { return e.value.get_den() == 1; });
}

}  // namespace detail

struct SmithForm {
  std::vector<mpz_class> invariant_factors;  // positive, each dividing the next
  std::size_t rank() const { return invariant_factors.size(); }
  /// Factors greater than one.
  std::vector<mpz_class> torsion() const {
    std::vector<mpz_class> t;
    for (const auto& f : invariant_factors)
      if (f > 1) t.push_back(f);
    return t;
  }
};

inline SmithForm smith_normal_form(const SparseMatrix<mpz_class>& m) {
  IntegerRing zz;
  detail::Eliminator<IntegerRing> el(m, zz);
  const int units = el.eliminate([&](const mpz_class& v) { return zz.is_unit(v); });
  auto rest = detail::normalize_diagonal(detail::dense_smith_diagonal(detail::densify(el.leftover())));
  SmithForm s;
  s.invariant_factors.assign(units, mpz_class(1));
  s.invariant_factors.insert(s.invariant_factors.end(), rest.begin(), rest.end());
  s.invariant_factors = detail::normalize_diagonal(std::move(s.invariant_factors));
  return s;
}

inline std::size_t rank_over_field(const SparseMatrix<std::uint64_t>& m, const PrimeField& f) {
  detail::Eliminator<PrimeField> el(m, f);
  return el.eliminate([](std::uint64_t v) { return v != 0; });
}

inline std::size_t rank_over_field(const SparseMatrix<mpq_class>& m, const RationalField& q) {
  if (detail::all_integral(m)) {
    // Unit pivots keep everything integral; the remainder is finished over Q.
    SparseMatrix<mpz_class> z(m.rows, m.cols);
    for (const auto& e : m.entries) z.add(e.row, e.col, e.value.get_num());
    IntegerRing zz;
    detail::Eliminator<IntegerRing> el(z, zz);
    std::size_t r = el.eliminate([&](const mpz_class& v) { return zz.is_unit(v); });
    auto rest = el.leftover();
    if (rest.empty()) return r;
    SparseMatrix<mpq_class> left(static_cast<int>(rest.size()), m.cols);
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (const auto& [c, v] : rest[i]) left.add(static_cast<int>(i), c, mpq_class(v));
    detail::Eliminator<RationalField> el2(left, q);
    return r + el2.eliminate([](const mpq_class& v) { return sgn(v) != 0; });
  }
  detail::Eliminator<RationalField> el(m, q);
  std::size_t r = el.eliminate([](const mpq_class& v) { return v == 1 || v == -1; });
  return r + el.eliminate([](const mpq_class& v) { return sgn(v) != 0; });
}

/// Rank of an integer matrix over Q.
inline std::size_t rank_over_field(const SparseMatrix<mpz_class>& m) {
  IntegerRing zz;
  detail::Eliminator<IntegerRing> el(m, zz);
  std::size_t r = el.eliminate([&](const mpz_class& v) { return zz.is_unit(v); });
  auto rest = el.leftover();
  if (rest.empty()) return r;
  RationalField q;
  SparseMatrix<mpq_class> left(static_cast<int>(rest.size()), m.cols);
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [c, v] : rest[i]) left.add(static_cast<int>(i), c, mpq_class(v));
  detail::Eliminator<RationalField> el2(left, q);
  return r + el2.eliminate([](const mpq_class& v) { return sgn(v) != 0; });
}

}  // namespace khoma
