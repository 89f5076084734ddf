#include <catch_amalgamated.hpp>

#include <set>

#include "khoma/frobenius.hpp"
#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "khoma/khcomplex.hpp"
#include "support/oracles.hpp"

using namespace khoma;

namespace {

const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

std::set<std::tuple<int, int, std::int64_t>> triples(const SparseMatrix<mpq_class>& m) {
  std::set<std::tuple<int, int, std::int64_t>> out;
  for (const auto& e : m.entries) out.insert({e.row, e.col, e.value.get_num().get_si()});
  return out;
}

}  // namespace

TEST_CASE("edge signs count the ones before the star") {
  CHECK(edge_sign("*00") == 1);
  CHECK(edge_sign("1*0") == -1);
  CHECK(edge_sign("11*") == 1);
  CHECK(edge_sign("0*1") == 1);
  CHECK(edge_sign("1\xE2\x8B\x86" "1") == -1);
  CHECK_THROWS_AS(edge_sign("10"), Error);
  CHECK_THROWS_AS(edge_sign("*1*"), Error);
  CHECK_THROWS_AS(edge_sign("*2"), Error);
  const auto e = parse_edge("10*1");
  CHECK(e.coordinate == 2);
  CHECK(e.tail.word() == "1001");
  CHECK(e.head().word() == "1011");
  CHECK(e.sign() == edge_sign("10*1"));
}

TEST_CASE("edge maps are the multiplication and comultiplication of V") {
  const auto hopf = parse_pd(kHopf);
  const auto v = khovanov_algebra(RationalField{});
  int merges = 0, splits = 0;
  for (const char* zeta : {"*0", "0*", "*1", "1*"}) {
    const auto e = parse_edge(zeta);
    const int kt = resolve_state(hopf, e.tail).circle_count, kh = resolve_state(hopf, e.head()).circle_count;
    const auto m = edge_map(v, hopf, zeta);
    INFO(zeta);
    if (kt == 2 && kh == 1) {
      ++merges;
      // 1.1 = 1, x.1 = 1.x = x, x.x = 0.
      CHECK(triples(m) == std::set<std::tuple<int, int, std::int64_t>>{{0, 0, 1}, {1, 1, 1}, {1, 2, 1}});
    } else if (kt == 1 && kh == 2) {
      ++splits;
      // Delta(1) = 1(x)x + x(x)1, Delta(x) = x(x)x.
      CHECK(triples(m) == std::set<std::tuple<int, int, std::int64_t>>{{1, 0, 1}, {2, 0, 1}, {3, 1, 1}});
    }
  }
  CHECK(merges + splits == 4);
  CHECK_THROWS_AS(edge_map(v, hopf, "*00"), Error);
}

TEST_CASE("d squared vanishes for every algebra") {
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 8) continue;
    const auto d = f.diagram();
    INFO(f.name);
    for (auto [h, t] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, -1}, {-3, 2}})
      CHECK(check_d_squared(build_complex(d, h, t)));
  }
  CHECK(check_d_squared(build_complex(parse_pd(kTrefoil), 0, 0), PrimeField(2)));
}

TEST_CASE("a flipped edge sign breaks d squared") {
  const auto d = parse_pd(kTrefoil);
  BuildOptions opt;
  opt.flip_edge = std::pair<std::uint32_t, int>{0, 0};
  const auto c = build_complex(d, 0, 0, opt);
  CHECK_FALSE(check_d_squared(c));
  try {
    homology_table(c, RingSpec::rationals());
    FAIL("expected DifferentialNotSquareZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DifferentialNotSquareZero);
  }
}

TEST_CASE("chain groups have the expected shape") {
  const auto d = parse_pd(kTrefoil);
  const auto c = build_complex(d);
  CHECK(c.graded());
  CHECK(c.min_degree == -3);
  CHECK(c.max_degree() == 0);
  // sum over states of 2^k.
  std::size_t expected = 0;
  for (const auto& s : enumerate_states(d)) expected += std::size_t{1} << resolve_state(d, s).circle_count;
  CHECK(c.total_dimension() == expected);
  CHECK(euler_characteristic(c) == unnormalized_jones(d));
  CHECK(build_complex(d, 0, 1).period == 4);
  CHECK(build_complex(d, 1, 0).period == 2);
}

TEST_CASE("the chain-level Euler characteristic is the state sum on the corpus") {
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 10) continue;
    INFO(f.name);
    CHECK(euler_characteristic(build_complex(f.diagram())) == unnormalized_jones(f.diagram()));
  }
}

TEST_CASE("the debug dump is deterministic") {
  const auto d = parse_pd(kHopf);
  const auto a = debug_dump(build_complex(d), link_cube(d));
  CHECK(a == debug_dump(build_complex(d), link_cube(d)));
  CHECK(a.find("basis i=-2") != std::string::npos);
}
