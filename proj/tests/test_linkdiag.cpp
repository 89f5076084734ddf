#include <catch_amalgamated.hpp>

#include <algorithm>

#include "khoma/fixtures.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/planar.hpp"
#include "support/braid.hpp"
#include "support/oracles.hpp"

using namespace khoma;

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

const char* kHopf = "X(1,4,2,3) X(3,2,4,1)";
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

}  // namespace

TEST_CASE("PD parsing round trips") {
  for (const auto& f : testing::diagram_corpus()) {
    INFO(f.name);
    const auto d = f.diagram();
    CHECK(d.crossing_count() == f.crossings);
    CHECK(d.component_count() == f.components);
    CHECK(parse_pd(serialize_pd(d)) == d);
  }
  CHECK(parse_pd("X[1,4,2,3] X[3,2,4,1]") == parse_pd(kHopf));
  CHECK(parse_pd("").empty());
  CHECK(parse_pd("O O").component_count() == 2);
}

TEST_CASE("PD parse errors") {
  CHECK(code_of([] { parse_pd("X(1,2,3)"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_pd("Y(1,2,3,4)"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_pd("X(1,4,2,3)X(3,2,4,1)"); }) == ErrorCode::MalformedToken);
  CHECK(code_of([] { parse_pd("X(1,4,2,3) X(3,2,4,4)"); }) == ErrorCode::ArcLabelUsedWrongMultiplicity);
  CHECK(code_of([] { parse_pd("X(1,4,2,3) X(3,2,4,9)"); }) == ErrorCode::ArcLabelUsedWrongMultiplicity);
  // The under-strand must start with its incoming arc.
  CHECK(code_of([] { parse_pd("X(1,2,3,4) X(3,4,1,2)"); }) == ErrorCode::InconsistentOrientation);
}

TEST_CASE("signs, writhe and linking numbers") {
  const auto hopf = parse_pd(kHopf);
  CHECK(writhe_counts(hopf) == WritheCounts{0, 2});
  CHECK(linking_number(hopf, 0, 1) == -1);
  CHECK(linking_number(mirror(hopf), 0, 1) == 1);
  CHECK(code_of([&] { linking_number(hopf, 0, 0); }) == ErrorCode::SameComponent);
  CHECK(code_of([&] { linking_number(hopf, 0, 2); }) == ErrorCode::ComponentOutOfRange);

  const auto trefoil = parse_pd(kTrefoil);
  CHECK(writhe_counts(trefoil) == WritheCounts{0, 3});
  CHECK(writhe_counts(mirror(trefoil)) == WritheCounts{3, 0});
  CHECK(is_positive(mirror(trefoil)));
  CHECK_FALSE(is_positive(trefoil));

  const auto borromean = testing::fixture("borromean").diagram();
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(linking_number(borromean, a, b) == 0);
  CHECK(linking_number(testing::fixture("torus-2-4").diagram(), 0, 1) == 2);
}

TEST_CASE("mirror is an involution reversing every sign") {
  for (const auto& f : testing::diagram_corpus()) {
    const auto d = f.diagram();
    const auto m = mirror(d);
    CHECK(mirror(m) == d);
    CHECK(writhe_counts(m).writhe() == -writhe_counts(d).writhe());
  }
}

TEST_CASE("states are enumerated in lexicographic order") {
  const auto states = enumerate_states(parse_pd(kTrefoil));
  REQUIRE(states.size() == 8);
  CHECK(states.front().word() == "000");
  CHECK(states[1].word() == "001");
  CHECK(states[4].word() == "100");
  CHECK(states.back().word() == "111");
  CHECK(State::from_word("0110").weight() == 2);
  CHECK(code_of([] { State::from_word("012"); }) == ErrorCode::Malformed);
  CHECK(code_of([] { check_state_space(kMaxCrossings + 1); }) == ErrorCode::StateSpaceTooLarge);
}

TEST_CASE("circle counts agree with a loop-tracing oracle") {
  for (const auto& f : testing::diagram_corpus()) {
    const auto d = f.diagram();
    if (d.crossing_count() > 8) continue;
    INFO(f.name);
    const auto t = d.tuples();
    for (const auto& s : enumerate_states(d)) {
      std::vector<std::pair<int, int>> joins;
      for (int k = 0; k < d.crossing_count(); ++k) {
        if (s.at(k) == 0) joins.push_back({t[k][0], t[k][1]}), joins.push_back({t[k][2], t[k][3]});
        else joins.push_back({t[k][0], t[k][3]}), joins.push_back({t[k][1], t[k][2]});
      }
      CHECK(resolve_state(d, s).circle_count == testing::count_loops(d.arc_count(), joins, d.free_loops()));
    }
  }
}

TEST_CASE("the oriented smoothing has one circle per Seifert circle") {
  // Trefoil as a 2-braid closure: two Seifert circles.
  CHECK(resolve_state(parse_pd(kTrefoil), oriented_state(parse_pd(kTrefoil))).circle_count == 2);
  CHECK(resolve_state(parse_pd(kHopf), oriented_state(parse_pd(kHopf))).circle_count == 2);
}

TEST_CASE("nesting depths") {
  const auto hopf = parse_pd(kHopf);
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  // One all-same smoothing of the 2-crossing Hopf diagram gives concentric circles, the other two side by side.
  const auto d00 = sorted(nesting_depths(hopf, State::from_word("00")));
  const auto d11 = sorted(nesting_depths(hopf, State::from_word("11")));
  CHECK(((d00 == std::vector<int>{0, 1} && d11 == std::vector<int>{0, 0}) ||
         (d00 == std::vector<int>{0, 0} && d11 == std::vector<int>{0, 1})));
  CHECK(sorted(nesting_depths(parse_pd("O O"), State{})) == std::vector<int>{0, 0});
  // The hint picks the outer face; a bad hint is reported.
  CHECK_NOTHROW(nesting_depths(hopf, State::from_word("00"), "-1"));
  CHECK_THROWS_AS(nesting_depths(hopf, State::from_word("00"), "+99"), Error);
}

TEST_CASE("braid closures produce the fixture PD codes") {
  const auto corpus = read_json_file(std::string(KHOMA_FIXTURES_DIR) + "/diagrams.json");
  int checked = 0;
  for (const auto& e : corpus) {
    if (!e.contains("braid")) continue;
    const auto& b = e.at("braid");
    const auto d = testing::braid_closure(b.at("strands").template get<int>(), b.at("word").template get<std::vector<int>>());
    INFO(e.at("name").get<std::string>());
    CHECK(serialize_pd(d) == e.at("pd").get<std::string>());
    ++checked;
  }
  CHECK(checked >= 10);
}
