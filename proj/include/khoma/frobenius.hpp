#pragma once

#include <array>
#include <string>
#include <vector>

#include "khoma/rings.hpp"

namespace khoma {

/// Rank-2 commutative Frobenius algebra on the basis {1, x}. Index 0 is 1, index 1 is x.
/// deg(1) = +1, deg(x) = -1.
template <class Ring>
struct FrobeniusAlgebra {
  using value_type = typename Ring::value_type;
  using Vec = std::array<value_type, 2>;
  using Mat = std::array<std::array<value_type, 2>, 2>;

  Ring ring;
  value_type h;
  value_type t;
  std::array<std::array<Vec, 2>, 2> mult;  // m(e_a (x) e_b) = sum_c mult[a][b][c] e_c
  std::array<Mat, 2> comult;               // Delta(e_a) = sum_{b,c} comult[a][b][c] e_b (x) e_c
  Vec unit;
  Vec counit;

  static constexpr std::array<int, 2> degree{+1, -1};

  /// True iff m and Delta are homogeneous (h = t = 0).
  bool graded() const { return ring.is_zero(h) && ring.is_zero(t); }

  /// The q-filtration of the complex splits into residues modulo this period (0 = genuinely graded).
  int grading_period() const {
    if (!ring.is_zero(h)) return 2;
    if (!ring.is_zero(t)) return 4;
    return 0;
  }
};

/// A_{h,t}: x^2 = h x + t, Delta(1) = 1(x)x + x(x)1 - h 1(x)1, Delta(x) = x(x)x + t 1(x)1,
/// i(1) = 1, eps(1) = 0, eps(x) = 1.
template <class Ring>
FrobeniusAlgebra<Ring> frobenius_from_ht(const typename Ring::value_type& h, const typename Ring::value_type& t,
                                         const Ring& ring) {
  FrobeniusAlgebra<Ring> a{ring, h, t, {}, {}, {}, {}};
  const auto zero = ring.zero(), one = ring.one();
  a.mult[0][0] = {one, zero};
  a.mult[0][1] = {zero, one};
  a.mult[1][0] = {zero, one};
  a.mult[1][1] = {t, h};
  a.comult[0] = {{{ring.neg(h), one}, {one, zero}}};
  a.comult[1] = {{{t, zero}, {zero, one}}};
  a.unit = {one, zero};
  a.counit = {zero, one};
  return a;
}

template <class Ring>
FrobeniusAlgebra<Ring> frobenius_from_ht(long long h, long long t, const Ring& ring) {
  return frobenius_from_ht(ring.from_int(h), ring.from_int(t), ring);
}

/// Khovanov's V = A_{0,0}.
template <class Ring>
FrobeniusAlgebra<Ring> khovanov_algebra(const Ring& ring) {
  return frobenius_from_ht<Ring>(0, 0, ring);
}

/// Lee's algebra A_{0,1}.
template <class Ring>
FrobeniusAlgebra<Ring> lee_algebra(const Ring& ring) {
  return frobenius_from_ht<Ring>(0, 1, ring);
}

struct FrobeniusReport {
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
  bool failed_axiom(const std::string& name) const {
    for (const auto& f : failed)
      if (f == name) return true;
    return false;
  }
};

namespace detail {

template <class Ring>
struct TensorOps {
  using A = FrobeniusAlgebra<Ring>;
  using value_type = typename Ring::value_type;
  using V1 = std::array<value_type, 2>;
  using V2 = std::array<value_type, 4>;  // index 2*b + c
  using V3 = std::array<value_type, 8>;  // index 4*a + 2*b + c

  const A& alg;

  V1 zero1() const { return {alg.ring.zero(), alg.ring.zero()}; }
  V2 zero2() const {
    V2 v;
    v.fill(alg.ring.zero());
    return v;
  }
  V3 zero3() const {
    V3 v;
    v.fill(alg.ring.zero());
    return v;
  }
  V1 basis(int a) const {
    V1 v = zero1();
    v[a] = alg.ring.one();
    return v;
  }
  V1 m(const V1& u, const V1& w) const {
    V1 r = zero1();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          r[c] = alg.ring.add(r[c], alg.ring.mul(alg.ring.mul(u[a], w[b]), alg.mult[a][b][c]));
    return r;
  }
  V1 m2(const V2& u) const {
    V1 r = zero1();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        V1 p = m(basis(a), basis(b));
        for (int c = 0; c < 2; ++c) r[c] = alg.ring.add(r[c], alg.ring.mul(u[2 * a + b], p[c]));
      }
    return r;
  }
  V2 delta(const V1& u) const {
    V2 r = zero2();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          r[2 * b + c] = alg.ring.add(r[2 * b + c], alg.ring.mul(u[a], alg.comult[a][b][c]));
    return r;
  }
  value_type eps(const V1& u) const {
    return alg.ring.add(alg.ring.mul(u[0], alg.counit[0]), alg.ring.mul(u[1], alg.counit[1]));
  }
  bool eq(const V1& u, const V1& w) const {
    for (int i = 0; i < 2; ++i)
      if (!alg.ring.is_zero(alg.ring.sub(u[i], w[i]))) return false;
    return true;
  }
  template <std::size_t N>
  bool eqn(const std::array<value_type, N>& u, const std::array<value_type, N>& w) const {
    for (std::size_t i = 0; i < N; ++i)
      if (!alg.ring.is_zero(alg.ring.sub(u[i], w[i]))) return false;
    return true;
  }
};

}  // namespace detail

/// Check the Frobenius algebra axioms on basis elements. Never throws; lists failed axiom names.
template <class Ring>
FrobeniusReport verify_frobenius(const FrobeniusAlgebra<Ring>& alg) {
  detail::TensorOps<Ring> ops{alg};
  const Ring& R = alg.ring;
  FrobeniusReport report;
  auto check = [&](const char* name, bool ok) {
    if (!ok) report.failed.emplace_back(name);
  };

  bool assoc = true, comm = true, unit = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto ea = ops.basis(a), eb = ops.basis(b);
      comm = comm && ops.eq(ops.m(ea, eb), ops.m(eb, ea));
      for (int c = 0; c < 2; ++c) {
        auto ec = ops.basis(c);
        assoc = assoc && ops.eq(ops.m(ops.m(ea, eb), ec), ops.m(ea, ops.m(eb, ec)));
      }
    }
  for (int a = 0; a < 2; ++a) {
    auto ea = ops.basis(a);
    unit = unit && ops.eq(ops.m(alg.unit, ea), ea) && ops.eq(ops.m(ea, alg.unit), ea);
  }
  check("associativity", assoc);
  check("commutativity", comm);
  check("unit", unit);

  bool coassoc = true, cocomm = true, counit = true;
  for (int a = 0; a < 2; ++a) {
    auto d = ops.delta(ops.basis(a));
    auto left = ops.zero3(), right = ops.zero3();
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const auto& coef = d[2 * b + c];
        auto db = ops.delta(ops.basis(b));  // (Delta (x) id)
        auto dc = ops.delta(ops.basis(c));  // (id (x) Delta)
        for (int u = 0; u < 2; ++u)
          for (int v = 0; v < 2; ++v) {
            left[4 * u + 2 * v + c] = R.add(left[4 * u + 2 * v + c], R.mul(coef, db[2 * u + v]));
            right[4 * b + 2 * u + v] = R.add(right[4 * b + 2 * u + v], R.mul(coef, dc[2 * u + v]));
          }
      }
    coassoc = coassoc && ops.eqn(left, right);
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) cocomm = cocomm && R.is_zero(R.sub(d[2 * b + c], d[2 * c + b]));
    auto el = ops.zero1(), er = ops.zero1();
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        el[c] = R.add(el[c], R.mul(d[2 * b + c], alg.counit[b]));
        er[b] = R.add(er[b], R.mul(d[2 * b + c], alg.counit[c]));
      }
    counit = counit && ops.eq(el, ops.basis(a)) && ops.eq(er, ops.basis(a));
  }
  check("coassociativity", coassoc);
  check("cocommutativity", cocomm);
  check("counit", counit);

  // Delta(m(a,b)) = (m (x) id)(a (x) Delta(b)) = (id (x) m)(Delta(a) (x) b)
  bool frob = true;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      auto lhs = ops.delta(ops.m(ops.basis(a), ops.basis(b)));
      auto r1 = ops.zero2(), r2 = ops.zero2();
      auto db = ops.delta(ops.basis(b));
      auto da = ops.delta(ops.basis(a));
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          auto p1 = ops.m(ops.basis(a), ops.basis(u));
          auto p2 = ops.m(ops.basis(v), ops.basis(b));
          for (int w = 0; w < 2; ++w) {
            r1[2 * w + v] = R.add(r1[2 * w + v], R.mul(db[2 * u + v], p1[w]));
            r2[2 * u + w] = R.add(r2[2 * u + w], R.mul(da[2 * u + v], p2[w]));
          }
        }
      frob = frob && ops.eqn(lhs, r1) && ops.eqn(lhs, r2);
    }
  check("frobenius", frob);

  // Gram matrix of <v,w> = eps(vw) must be invertible.
  std::array<std::array<typename Ring::value_type, 2>, 2> gram;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) gram[a][b] = ops.eps(ops.m(ops.basis(a), ops.basis(b)));
  auto det = R.sub(R.mul(gram[0][0], gram[1][1]), R.mul(gram[0][1], gram[1][0]));
  check("nondegeneracy", R.is_unit(det));

  // v w = sum v' <v'', w>
  bool form = true;
  for (int a = 0; a < 2; ++a) {
    auto d = ops.delta(ops.basis(a));
    for (int w = 0; w < 2; ++w) {
      auto lhs = ops.m(ops.basis(a), ops.basis(w));
      auto rhs = ops.zero1();
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          rhs[b] = R.add(rhs[b], R.mul(d[2 * b + c], ops.eps(ops.m(ops.basis(c), ops.basis(w)))));
      form = form && ops.eq(lhs, rhs);
    }
  }
  check("coproduct_from_form", form);

  // m(Delta(v)) = m(m(Delta(1)), v)
  bool genus = true;
  auto handle = ops.m2(ops.delta(alg.unit));
  for (int a = 0; a < 2; ++a)
    genus = genus && ops.eq(ops.m2(ops.delta(ops.basis(a))), ops.m(handle, ops.basis(a)));
  check("genus_identity", genus);

  return report;
}

/// eps((m o Delta)^genus (i(1))), the value of the closed genus-g surface.
template <class Ring>
typename Ring::value_type closed_surface_value(const FrobeniusAlgebra<Ring>& alg, int genus) {
  detail::TensorOps<Ring> ops{alg};
  auto v = alg.unit;
  for (int g = 0; g < genus; ++g) v = ops.m2(ops.delta(v));
  return ops.eps(v);
}

}  // namespace khoma
