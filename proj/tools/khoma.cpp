#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "khoma/khoma.hpp"

namespace {

using namespace khoma;

struct Options {
  std::string input;
  std::string file;
  std::string ring = "Q";
  long long h = 0;
  long long t = 0;
  std::string format = "table";
  std::string outer_face;
  std::string orientation;
  std::string lee_mode = "dims";
  bool normalized = false;
  bool bracket = false;
  bool shortcut = false;
  bool chromatic = false;
  int crossing = -1;
  bool all = false;
  std::string corpus = "fixtures";
};

std::string read_input(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (o.input.empty()) fail(ErrorCode::InvalidArgument, "no input given");
  return o.input;
}

bool json_out(const Options& o) { return o.format == "json"; }

void print_dims(const Options& o, const std::map<int, std::int64_t>& dims, const std::string& name) {
  if (json_out(o)) {
    std::cout << dims_to_json(dims, name).dump() << "\n";
    return;
  }
  std::cout << "i  dim\n";
  for (auto [i, v] : dims) std::cout << i << "  " << v << "\n";
}

int run_jones(const Options& o) {
  const LinkDiagram d = parse_pd(read_input(o));
  const LaurentPolynomial p = o.bracket ? kauffman_bracket(d) : o.normalized ? jones(d) : unnormalized_jones(d);
  if (json_out(o))
    std::cout << Json{{"invariant", o.bracket ? "bracket" : o.normalized ? "jones" : "jones_hat"}, {"value", p.to_string()}}.dump()
              << "\n";
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

int run_kh(const Options& o) {
  const LinkDiagram d = parse_pd(read_input(o));
  const RingSpec ring = RingSpec::parse(o.ring);
  const ChainComplex c = build_complex(d, o.h, o.t);
  if (!c.graded()) {
    std::map<int, std::int64_t> dims;
    for (const auto& [i, g] : homology_by_degree(c, ring))
      if (g.betti) dims[i] = g.betti;
    print_dims(o, dims, "kh_filtered");
    return 0;
  }
  const HomologyTable t = homology_table(c, ring);
  if (json_out(o)) std::cout << table_to_json(t, "kh").dump() << "\n";
  else std::cout << format_table(t);
  return 0;
}

int run_lee(const Options& o) {
  const LinkDiagram d = parse_pd(read_input(o));
  if (o.lee_mode == "dims") {
    print_dims(o, lee_homology_dims(d), "lee");
  } else if (o.lee_mode == "s") {
    const SInvariantResult s = s_values(d);
    if (json_out(o)) std::cout << s_to_json(s).dump() << "\n";
    else std::cout << "s_min " << s.s_min << "\ns_max " << s.s_max << "\ns " << s.s << "\n";
  } else {
    const OrientationChoice theta = OrientationChoice::parse(o.orientation);
    const LeeChain ch = canonical_cycle(d, theta, o.outer_face);
    const bool cycle = is_cycle(lee_complex(d), ch);
    const int k = static_cast<int>(ch.groups.size());
    if (json_out(o)) {
      Json terms = Json::array();
      for (std::uint32_t m = 0; m < ch.coefficients.size(); ++m)
        terms.push_back({{"labels", labeling(Generator{ch.state.bits, m}, k)}, {"coefficient", ch.coefficients[m]}});
      std::cout << Json{{"invariant", "lee_canonical"},
                        {"orientation", theta.word(d.component_count())},
                        {"state", ch.state.word()},
                        {"degree", ch.degree},
                        {"formula_degree", generator_degree(d, theta)},
                        {"groups", ch.groups},
                        {"cycle", cycle},
                        {"terms", terms}}
                       .dump()
                << "\n";
    } else {
      std::cout << "state " << ch.state.word() << "\ndegree " << ch.degree << "\ncircles";
      for (int g : ch.groups) std::cout << (g ? " x-1" : " x+1");
      std::cout << "\ncycle " << (cycle ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int run_s(const Options& o) {
  const LinkDiagram d = parse_pd(read_input(o));
  if (o.shortcut) {
    const int s = s_positive_shortcut(d);
    if (json_out(o)) std::cout << Json{{"invariant", "s_shortcut"}, {"s", s}}.dump() << "\n";
    else std::cout << s << "\n";
    return 0;
  }
  const SInvariantResult s = s_values(d);
  if (json_out(o)) std::cout << s_to_json(s).dump() << "\n";
  else std::cout << s.s << "\n";
  return 0;
}

int run_les(const Options& o) {
  const LinkDiagram d = parse_pd(read_input(o));
  std::vector<int> crossings;
  if (o.crossing >= 0) crossings.push_back(o.crossing);
  else
    for (int k = 0; k < d.crossing_count(); ++k) crossings.push_back(k);
  bool ok = true;
  Json all = Json::array();
  for (int k : crossings) {
    const LESReport r = les_consistency(d, k);
    ok = ok && r.pass();
    Json j = les_to_json(r);
    j["crossing"] = k;
    all.push_back(j);
    if (!json_out(o))
      std::cout << "crossing " << k << " " << to_string(r.kind) << " c=" << r.c << " " << (r.pass() ? "pass" : "FAIL")
                << (r.split() ? " split" : "") << "\n";
  }
  if (json_out(o)) std::cout << (all.size() == 1 ? all[0] : all).dump() << "\n";
  return ok ? 0 : 2;
}

int run_graph(const Options& o) {
  std::string text = read_input(o);
  std::replace(text.begin(), text.end(), ';', '\n');
  const Graph g = parse_graph(text);
  if (o.chromatic) {
    const std::string p = chromatic_polynomial(g).to_string("λ");
    if (json_out(o)) std::cout << Json{{"invariant", "chromatic"}, {"value", p}}.dump() << "\n";
    else std::cout << p << "\n";
    return 0;
  }
  const HomologyTable t = homology_table(graph_complex(g, o.h, o.t), RingSpec::parse(o.ring));
  if (json_out(o)) std::cout << table_to_json(t, "graph").dump() << "\n";
  else std::cout << format_table(t);
  return 0;
}

struct Tally {
  int passed = 0, failed = 0;
  void check(bool ok, const std::string& what) {
    (ok ? passed : failed)++;
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
  }
};

int run_verify(const Options& o) {
  if (!o.all) fail(ErrorCode::InvalidArgument, "verify needs --all");
  Tally tally;
  for (const auto& f : load_diagram_fixtures(o.corpus)) {
    auto guard = [&](const std::string& what, auto&& body) {
      try {
        tally.check(body(), f.name + " " + what);
      } catch (const Error& e) {
        tally.check(false, f.name + " " + what + " (" + e.what() + ")");
      }
    };
    const LinkDiagram d = f.diagram();
    if (d.crossing_count() > 12) continue;
    const HomologyTable hq = khovanov_homology(d);
    guard("euler", [&] { return graded_euler_characteristic(hq) == unnormalized_jones(d); });
    guard("parity", [&] {
      const int want = d.component_count() % 2;
      return std::all_of(hq.entries.begin(), hq.entries.end(),
                         [&](const auto& e) { return ((e.first.second % 2) + 2) % 2 == want; });
    });
    for (const auto& [ring, expected] : f.kh)
      guard("kh-" + ring, [&] { return khovanov_homology(d, RingSpec::parse(ring)) == expected; });
    if (f.jones_hat)
      guard("jones", [&] { return unnormalized_jones(d) == LaurentPolynomial::parse(*f.jones_hat); });
    if (d.crossing_count() <= 8) {
      guard("uct", [&] {
        const HomologyTable hz = khovanov_homology(d, RingSpec::integers());
        return uct_transport(hz, 2) == khovanov_homology(d, RingSpec::integers_mod(2));
      });
      guard("les", [&] {
        for (int k = 0; k < d.crossing_count(); ++k)
          if (!les_consistency(d, k).pass()) return false;
        return true;
      });
    }
    guard("lee", [&] {
      std::int64_t total = 0;
      for (auto [i, v] : lee_homology_dims(d)) total += v;
      return total == (std::int64_t{1} << d.component_count());
    });
    if (f.s) guard("s", [&] { return s_values(d).s == *f.s; });
  }
  for (const auto& f : load_graph_fixtures(o.corpus)) {
    const Graph g = f.graph();
    try {
      const LaurentPolynomial p = chromatic_polynomial(g);
      tally.check(graded_euler_characteristic(graph_homology(g)) == p.compose(graph_algebra_qdim()), f.name + " euler");
      if (f.chromatic) tally.check(p == LaurentPolynomial::parse(*f.chromatic, "λ"), f.name + " chromatic");
      bool dc = true;
      for (int e = 0; e < g.edge_count(); ++e) dc = dc && deletion_contraction_check(g, e).pass();
      tally.check(dc, f.name + " deletion-contraction");
    } catch (const Error& e) {
      tally.check(false, f.name + " (" + e.what() + ")");
    }
  }
  std::cout << tally.passed << " passed, " << tally.failed << " failed\n";
  return tally.failed == 0 ? 0 : 2;
}

void error_line(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology, Jones polynomial, Lee theory and graph homology"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "PD code (or graph text)");
    sub->add_option("--file", o.file, "Read the input from a file");
    sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "Q, Z or Zp:<p>");
    sub->add_option("--h", o.h, "h of A_{h,t}");
    sub->add_option("--t", o.t, "t of A_{h,t}");
  };

  auto* jones_cmd = app.add_subcommand("jones", "Unnormalised Jones polynomial");
  add_input(jones_cmd);
  jones_cmd->add_flag("--normalized", o.normalized, "Divide by q + q^-1");
  jones_cmd->add_flag("--bracket", o.bracket, "Kauffman bracket instead");

  auto* kh_cmd = app.add_subcommand("kh", "Khovanov homology table");
  add_input(kh_cmd);
  add_algebra(kh_cmd);

  auto* lee_cmd = app.add_subcommand("lee", "Lee homology");
  lee_cmd->add_option("mode", o.lee_mode, "dims, s or canonical")->check(CLI::IsMember({"dims", "s", "canonical"}));
  add_input(lee_cmd);
  lee_cmd->add_option("--orientation", o.orientation, "Components to reverse, e.g. 0110");
  lee_cmd->add_option("--outer-face", o.outer_face, "+a or -a: the face left or right of arc a is unbounded");

  auto* s_cmd = app.add_subcommand("s", "Rasmussen s-invariant");
  add_input(s_cmd);
  s_cmd->add_flag("--shortcut", o.shortcut, "Positive-diagram formula n - r + 1");

  auto* les_cmd = app.add_subcommand("les", "Long exact sequence check");
  add_input(les_cmd);
  les_cmd->add_option("--crossing", o.crossing, "Crossing index (default: all)");

  auto* graph_cmd = app.add_subcommand("graph", "Chromatic graph homology");
  add_input(graph_cmd);
  add_algebra(graph_cmd);
  graph_cmd->add_flag("--chromatic", o.chromatic, "Print the chromatic polynomial");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites over a fixture corpus");
  verify_cmd->add_flag("--all", o.all, "Every suite");
  verify_cmd->add_option("corpus", o.corpus, "Fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line("Usage", e.what());
    return 1;
  }

  try {
    if (*jones_cmd) return run_jones(o);
    if (*kh_cmd) return run_kh(o);
    if (*lee_cmd) return run_lee(o);
    if (*s_cmd) return run_s(o);
    if (*les_cmd) return run_les(o);
    if (*graph_cmd) return run_graph(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const Error& e) {
    error_line(std::string(to_string(e.code())), e.what());
    return e.code() == ErrorCode::InvalidArgument ? 1 : 2;
  } catch (const std::exception& e) {
    error_line("Internal", e.what());
    return 2;
  }
  return 1;
}
