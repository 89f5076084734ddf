#include <catch_amalgamated.hpp>

#include "khoma/format.hpp"
#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "support/oracles.hpp"

using namespace khoma;

namespace {

const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

HomologyTable table(RingSpec ring, std::vector<std::tuple<int, int, std::int64_t, std::vector<std::int64_t>>> cells) {
  HomologyTable t{ring, {}};
  for (auto& [i, j, b, tor] : cells) t.set(i, j, {b, tor});
  return t;
}

}  // namespace

TEST_CASE("Hopf link over Q") {
  const auto expected = table(RingSpec::rationals(), {{0, 0, 1, {}}, {0, -2, 1, {}}, {-2, -4, 1, {}}, {-2, -6, 1, {}}});
  CHECK(khovanov_homology(parse_pd(kHopf)) == expected);
}

TEST_CASE("trefoil over Z has a Z/2") {
  const auto expected = table(RingSpec::integers(),
                              {{0, -1, 1, {}}, {0, -3, 1, {}}, {-2, -5, 1, {}}, {-2, -7, 0, {2}}, {-3, -9, 1, {}}});
  CHECK(khovanov_homology(parse_pd(kTrefoil), RingSpec::integers()) == expected);
}

TEST_CASE("unknot and unlinks") {
  CHECK(khovanov_homology(parse_pd("O")) == table(RingSpec::rationals(), {{0, 1, 1, {}}, {0, -1, 1, {}}}));
  CHECK(khovanov_homology(parse_pd("O O")).total_rank() == 4);
  CHECK(khovanov_homology(parse_pd("")) == table(RingSpec::rationals(), {{0, 0, 1, {}}}));
}

TEST_CASE("corpus tables match the fixtures") {
  for (const auto& f : testing::diagram_corpus()) {
    for (const auto& [ring, expected] : f.kh) {
      INFO(f.name << " over " << ring);
      CHECK(khovanov_homology(f.diagram(), expected.ring) == expected);
    }
  }
}

TEST_CASE("Z homology determines the field ranks") {
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 8) continue;
    INFO(f.name);
    const auto d = f.diagram();
    const auto z = khovanov_homology(d, RingSpec::integers());
    const auto q = khovanov_homology(d);
    for (const auto& [k, g] : q.entries) CHECK(z.betti(k.first, k.second) == g.betti);
    for (const auto& [k, g] : z.entries) CHECK(q.betti(k.first, k.second) == g.betti);
    CHECK(khovanov_homology(d, RingSpec::integers_mod(3)) == uct_transport(z, 3));
  }
}

TEST_CASE("homology ranks agree with dense elimination") {
  for (const std::string& pd : {std::string(kHopf), std::string(kTrefoil), testing::fixture("figure-eight").pd}) {
    const auto c = build_complex(parse_pd(pd));
    std::map<std::pair<int, int>, std::int64_t> ranks;
    // Per q, dim ker - dim im from dense ranks of each differential restricted to that q.
    for (int t = 0; t < c.slots(); ++t) {
      std::map<int, std::vector<int>> by_q;
      for (std::size_t g = 0; g < c.basis[t].size(); ++g) by_q[c.q[t][g]].push_back(static_cast<int>(g));
      for (const auto& [qv, cols] : by_q) {
        auto rank_of = [&](int slot) -> std::size_t {
          if (slot < 0 || slot + 1 >= c.slots()) return 0;
          const auto& m = c.d[slot];
          std::vector<int> src, dst;
          for (std::size_t g = 0; g < c.basis[slot].size(); ++g)
            if (c.q[slot][g] == qv) src.push_back(static_cast<int>(g));
          for (std::size_t g = 0; g < c.basis[slot + 1].size(); ++g)
            if (c.q[slot + 1][g] == qv) dst.push_back(static_cast<int>(g));
          std::vector<std::vector<mpq_class>> dense(dst.size(), std::vector<mpq_class>(src.size()));
          for (const auto& e : m.entries) {
            auto r = std::find(dst.begin(), dst.end(), e.row), s = std::find(src.begin(), src.end(), e.col);
            if (r != dst.end() && s != src.end()) dense[r - dst.begin()][s - src.begin()] += e.value;
          }
          return testing::dense_rank(dense);
        };
        const auto b = static_cast<std::int64_t>(cols.size() - rank_of(t) - rank_of(t - 1));
        if (b) ranks[{c.min_degree + t, qv}] = b;
      }
    }
    const auto h = homology_table(c, RingSpec::rationals());
    std::map<std::pair<int, int>, std::int64_t> got;
    for (const auto& [k, g] : h.entries) got[k] = g.betti;
    CHECK(got == ranks);
  }
}

TEST_CASE("filtered complexes have no bigraded table") {
  try {
    homology_table(build_complex(parse_pd(kTrefoil), 0, 1), RingSpec::rationals());
    FAIL("expected NotGraded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGraded);
  }
  const auto dims = homology_by_degree(build_complex(parse_pd(kTrefoil), 0, 1), RingSpec::rationals());
  std::int64_t total = 0;
  for (const auto& [i, g] : dims) total += g.betti;
  CHECK(total == 2);
}

TEST_CASE("graded Euler characteristic of the homology is the Jones polynomial") {
  for (const auto& f : testing::diagram_corpus()) {
    if (f.crossings > 10) continue;
    INFO(f.name);
    const auto d = f.diagram();
    CHECK(graded_euler_characteristic(khovanov_homology(d)) == unnormalized_jones(d));
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto d = testing::fixture("torus-3-4").diagram();
  const auto a = khovanov_homology(d, RingSpec::integers());
  setenv("KHOMA_THREADS", "1", 1);
  const auto b = khovanov_homology(d, RingSpec::integers());
  unsetenv("KHOMA_THREADS");
  CHECK(a == b);
}

TEST_CASE("table formatting") {
  const auto t = khovanov_homology(parse_pd(kTrefoil), RingSpec::integers());
  const auto text = format_table(t);
  CHECK(text.find("Z/2") != std::string::npos);
  CHECK(text.rfind("j\\i", 0) == 0);
  CHECK(format_group({2, {}}, RingSpec::integers()) == "Z^2");
  CHECK(format_group({1, {2}}, RingSpec::integers()) == "Z + Z/2");
  CHECK(format_group({0, {3, 3}}, RingSpec::integers()) == "(Z/3)^2");
  CHECK(format_group({2, {}}, RingSpec::integers_mod(2)) == "(Z/2)^2");
  CHECK(table_from_json(table_to_json(t)) == t);
}
