#include <catch_amalgamated.hpp>

#include "khoma/graph.hpp"
#include "khoma/homology.hpp"
#include "support/oracles.hpp"

using namespace khoma;
using P = LaurentPolynomial;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

const char* kTriangle = "v 3\ne 1 2\ne 2 3\ne 1 3\n";

}  // namespace

TEST_CASE("graph parsing") {
  const auto g = parse_graph(kTriangle);
  CHECK(g.vertex_count == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges[0] == std::pair{0, 1});
  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(parse_graph("v 1").edge_count() == 0);
  CHECK(parse_graph("# comment\nv 2 # two\ne 1 2").edge_count() == 1);
  CHECK(code_of([] { parse_graph("v 3\ne 1 5"); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { parse_graph("e 1 2"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { parse_graph("v 2\ne 1"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { parse_graph("v 0"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { parse_graph("v 2\nx 1 2"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { parse_graph(""); }) == ErrorCode::Malformed);
}

TEST_CASE("chromatic polynomials") {
  CHECK(chromatic_polynomial(parse_graph(kTriangle)) == P::parse("λ^3 - 3*λ^2 + 2*λ", "λ"));
  CHECK(chromatic_polynomial(parse_graph("v 4")) == P::monomial(4));
  CHECK(chromatic_polynomial(parse_graph("v 2\ne 1 2")) == P::parse("λ^2 - λ", "λ"));
  CHECK(chromatic_polynomial(parse_graph("v 1\ne 1 1")).is_zero());
  for (const auto& f : testing::graph_corpus()) {
    INFO(f.name);
    const auto g = f.graph();
    const auto p = chromatic_polynomial(g);
    CHECK(p == testing::chromatic_by_recursion(g));
    if (f.chromatic) CHECK(p == P::parse(*f.chromatic, "λ"));
    if (g.vertex_count <= 5)
      for (int m = 1; m <= 4; ++m) CHECK(p.evaluate(m) == count_colourings(g, m));
  }
}

TEST_CASE("deletion and contraction") {
  const auto g = parse_graph(kTriangle);
  const auto c = contract_edge(g, 0);
  CHECK(c.vertex_count == 2);
  CHECK(c.edge_count() == 2);
  CHECK(c.edges[0] == c.edges[1]);
  CHECK(delete_edge(g, 1).edge_count() == 2);
  CHECK(contract_edge(parse_graph("v 1\ne 1 1"), 0).edge_count() == 0);
  CHECK(code_of([] { delete_edge(parse_graph("v 2"), 0); }) == ErrorCode::EdgeNotFound);
  CHECK(code_of([] { deletion_contraction_check(parse_graph("v 3"), 0); }) == ErrorCode::EdgeNotFound);
}

TEST_CASE("graph complexes") {
  const auto g = parse_graph(kTriangle);
  const auto c = graph_complex(g);
  CHECK(check_d_squared(c));
  // k census of the 8 edge subsets: one with 3 components, three with 2, four with 1.
  CHECK(c.dimension(0) == 8);
  CHECK(c.dimension(1) == 12);
  CHECK(c.dimension(2) == 6);
  CHECK(c.dimension(3) == 2);
  for (auto [h, t] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, -1}})
    for (const auto& f : testing::graph_corpus()) CHECK(check_d_squared(graph_complex(f.graph(), h, t)));
  const auto edgeless = graph_homology(parse_graph("v 1"));
  CHECK(edgeless.total_rank() == 2);
  CHECK(edgeless.betti(0, 0) == 1);
  CHECK(edgeless.betti(0, -2) == 1);
}

TEST_CASE("Euler characteristic is the chromatic polynomial at qdim R") {
  for (const auto& f : testing::graph_corpus()) {
    INFO(f.name);
    const auto g = f.graph();
    const auto expected = chromatic_polynomial(g).compose(graph_algebra_qdim());
    CHECK(graded_euler_characteristic(graph_homology(g)) == expected);
    CHECK(euler_characteristic(graph_complex(g)) == expected);
  }
}

TEST_CASE("triangle homology") {
  const auto g = parse_graph(kTriangle);
  const auto q = graph_homology(g);
  CHECK(q.total_rank() == 2);
  CHECK(q.betti(0, -6) == 1);
  CHECK(q.betti(1, -2) == 1);
  const auto z = graph_homology(g, RingSpec::integers());
  CHECK(z.at(1, -4).torsion == std::vector<std::int64_t>{2});
}

TEST_CASE("the zero differential gives the same Euler characteristic but different homology") {
  const auto g = parse_graph(kTriangle);
  auto c = graph_complex(g);
  for (auto& m : c.d) m.entries.clear();
  const auto zero = homology_table(c, RingSpec::rationals());
  CHECK(graded_euler_characteristic(zero) == graded_euler_characteristic(graph_homology(g)));
  CHECK(zero.total_rank() == 28);
  CHECK_FALSE(zero == graph_homology(g));
}

TEST_CASE("deletion-contraction sequences are exact") {
  for (const auto& f : testing::graph_corpus()) {
    const auto g = f.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
      INFO(f.name << " edge " << e);
      CHECK(deletion_contraction_check(g, e).pass());
    }
  }
}
