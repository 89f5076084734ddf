#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <string>

#include "khoma/format.hpp"
#include "khoma/homology.hpp"

using namespace khoma;

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args) {
  char tmpl[] = "/tmp/khoma-cli-XXXXXX";
  const int fd = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  close(fd);
  const std::string err_path = tmpl;
  const std::string cmd = quote(KHOMA_CLI) + " " + args + " 2>" + err_path;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  if (FILE* e = std::fopen(err_path.c_str(), "r")) {
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), e)) r.err.append(buf.data(), n);
    std::fclose(e);
  }
  std::remove(err_path.c_str());
  return r;
}

const std::string kHopf = quote("X(1,4,2,3) X(3,2,4,1)");
const std::string kTrefoil = quote("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");

}  // namespace

TEST_CASE("jones of the unknot") {
  const auto r = run("jones O");
  CHECK(r.status == 0);
  CHECK(r.out == "q + q^-1\n");
  CHECK(run("jones --normalized O").out == "1\n");
  CHECK(run("jones " + kHopf).out == "1 + q^-2 + q^-4 + q^-6\n");
}

TEST_CASE("integral trefoil table") {
  const auto r = run("kh --ring Z " + kTrefoil);
  CHECK(r.status == 0);
  CHECK(r.out.find("Z/2") != std::string::npos);
  const auto j = run("kh --ring Z --format json " + kTrefoil);
  const auto t = table_from_json(Json::parse(j.out));
  CHECK(t.at(-2, -7).torsion == std::vector<std::int64_t>{2});
  CHECK(t == khovanov_homology(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"), RingSpec::integers()));
}

TEST_CASE("other subcommands") {
  CHECK(run("s " + kTrefoil).out == "-2\n");
  CHECK(Json::parse(run("s --shortcut " + kTrefoil).err).at("error") == "NotPositive");
  CHECK(run("lee dims " + kHopf).status == 0);
  CHECK(run("lee canonical --orientation 01 " + kHopf).out.find("cycle yes") != std::string::npos);
  const auto les = run("les --crossing 0 --format json " + kHopf);
  CHECK(les.status == 0);
  const auto lj = Json::parse(les.out);
  CHECK(lj.at("c") == -2);
  CHECK(lj.at("split") == true);
  CHECK(run("graph --chromatic " + quote("v 3;e 1 2;e 2 3;e 1 3")).out == "λ^3 - 3*λ^2 + 2*λ\n");
  CHECK(run("kh --h 0 --t 1 " + kTrefoil).out.find("dim") != std::string::npos);
}

TEST_CASE("exit codes and error lines") {
  const auto usage = run("frobnicate");
  CHECK(usage.status == 1);
  CHECK(usage.err.find("\"error\"") != std::string::npos);
  CHECK(run("kh --ring Zp:4 O").status == 1);
  const auto bad = run("jones " + quote("X(1,2,3)"));
  CHECK(bad.status == 2);
  CHECK(Json::parse(bad.err).at("error") == "MalformedToken");
  CHECK(Json::parse(run("s " + kHopf).err).at("error") == "NotAKnot");
  CHECK(run("kh --file /nonexistent/file").status != 0);
}

TEST_CASE("output is deterministic") {
  const std::string args = "kh --ring Z --format json " + kTrefoil;
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify over the fixture corpus") {
  const auto r = run("verify --all " + quote(KHOMA_FIXTURES_DIR));
  CHECK(r.status == 0);
  CHECK(r.out.find(" 0 failed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
