#include <catch_amalgamated.hpp>

#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "khoma/reidemeister.hpp"
#include "support/oracles.hpp"

using namespace khoma;
using P = LaurentPolynomial;

namespace {

const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

}  // namespace

TEST_CASE("the bracket agrees with the skein recursion") {
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 10) continue;
    INFO(f.name);
    CHECK(kauffman_bracket(f.diagram()) == testing::bracket_by_recursion(f.diagram()));
  }
}

TEST_CASE("Jones polynomials of small links") {
  CHECK(unnormalized_jones(parse_pd(kHopf)) == P::parse("1 + q^-2 + q^-4 + q^-6"));
  CHECK(jones(parse_pd(kHopf)) == P::parse("q^-1 + q^-5"));
  CHECK(unnormalized_jones(parse_pd("O")).to_string() == "q + q^-1");
  CHECK(jones(parse_pd("O")) == P(1));
  CHECK(unnormalized_jones(parse_pd(kTrefoil)) == P::parse("q^-1 + q^-3 + q^-5 - q^-9"));
  CHECK(unnormalized_jones(mirror(parse_pd(kTrefoil))) == unnormalized_jones(parse_pd(kTrefoil)).reflected());
  for (const auto& f : testing::diagram_corpus())
    if (f.jones_hat && f.crossings <= 10) {
      INFO(f.name);
      CHECK(unnormalized_jones(f.diagram()) == P::parse(*f.jones_hat));
    }
}

TEST_CASE("Jones is multiplicative under disjoint union") {
  const auto a = parse_pd(kHopf), b = parse_pd(kTrefoil);
  CHECK(unnormalized_jones(disjoint_union(a, b)) == unnormalized_jones(a) * unnormalized_jones(b));
  CHECK(unnormalized_jones(disjoint_union(a, parse_pd("O"))) == unnormalized_jones(a) * P::quantum_two());
}

TEST_CASE("diagrams of the same link have the same Jones polynomial") {
  const auto& corpus = testing::diagram_corpus();
  for (std::size_t a = 0; a < corpus.size(); ++a)
    for (std::size_t b = a + 1; b < corpus.size(); ++b)
      if (corpus[a].knot == corpus[b].knot && corpus[a].crossings <= 10 && corpus[b].crossings <= 10) {
        INFO(corpus[a].name << " vs " << corpus[b].name);
        CHECK(unnormalized_jones(corpus[a].diagram()) == unnormalized_jones(corpus[b].diagram()));
      }
}

TEST_CASE("universal coefficients") {
  const auto t = parse_pd(kTrefoil);
  const auto z = khovanov_homology(t, RingSpec::integers());
  for (std::uint64_t p : {2, 3, 5}) {
    INFO("p=" << p);
    CHECK(uct_transport(z, p) == khovanov_homology(t, RingSpec::integers_mod(p)));
  }
  const auto t2 = uct_transport(z, 2);
  CHECK(t2.betti(-3, -7) == 1);
  CHECK(t2.betti(-2, -7) == 1);
  CHECK(uct_transport(z, 3) .total_rank() == khovanov_homology(t).total_rank());
  CHECK_THROWS_AS(uct_transport(khovanov_homology(t), 2), Error);
}

TEST_CASE("Kunneth for disjoint unions") {
  const auto a = parse_pd(kHopf), b = parse_pd(kTrefoil);
  CHECK(kunneth_product(khovanov_homology(a), khovanov_homology(b)) == khovanov_homology(disjoint_union(a, b)));
  CHECK(kunneth_product(khovanov_homology(a), khovanov_homology(a)).total_rank() == 16);
  CHECK_THROWS_AS(kunneth_product(khovanov_homology(a, RingSpec::integers()), khovanov_homology(b)), Error);
}

TEST_CASE("long exact sequence for the Hopf link splits") {
  const auto rep = les_consistency(parse_pd(kHopf), 0);
  CHECK(rep.kind == LESCase::NegativeCrossing);
  CHECK(rep.c == -2);
  CHECK(rep.pass());
  CHECK(rep.split());
  CHECK_THROWS_AS(les_consistency(parse_pd(kHopf), 2), Error);
}

TEST_CASE("long exact sequence at positive and negative crossings") {
  const auto t = parse_pd(kTrefoil);
  for (int k = 0; k < 3; ++k) {
    const auto rep = les_consistency(t, k);
    CHECK(rep.kind == LESCase::NegativeCrossing);
    CHECK(rep.c == -3);
    CHECK(rep.pass());
  }
  const auto m = mirror(parse_pd(kHopf));
  const auto rep = les_consistency(m, 1);
  CHECK(rep.kind == LESCase::PositiveCrossing);
  CHECK(rep.pass());
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 6) continue;
    const auto d = f.diagram();
    for (int k = 0; k < d.crossing_count(); ++k) {
      INFO(f.name << " crossing " << k);
      CHECK(les_consistency(d, k).pass());
    }
  }
}

TEST_CASE("a wrong q-shift breaks the sequence") {
  const auto d = parse_pd(kTrefoil);
  const auto h = khovanov_homology(d);
  const auto h0 = khovanov_homology(resolve_crossing(d, 0, 0));
  const auto h1 = khovanov_homology(resolve_crossing(d, 0, 1));
  const int c = writhe_counts(resolve_crossing(d, 0, 0)).n_minus - writhe_counts(d).n_minus;
  std::set<int> js;
  for (int j = -15; j <= 5; ++j) js.insert(j);
  auto run = [&](int shift) {
    return detail::exactness_strands(
        js, -6, 2, [&](int i, int j) { return h1.betti(i, j + 1); }, [&](int i, int j) { return h.betti(i, j); },
        [&](int i, int j) { return h0.betti(i - c, j - 3 * c - shift); });
  };
  auto all_pass = [](const std::vector<LESStrand>& s) {
    return std::all_of(s.begin(), s.end(), [](const LESStrand& x) { return x.pass(); });
  };
  CHECK(all_pass(run(1)));
  CHECK_FALSE(all_pass(run(0)));
  CHECK_FALSE(all_pass(run(3)));
}
