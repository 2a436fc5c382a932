#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "contexts.hpp"
#include "valgroup/cli.hpp"

using namespace valgroup;
using namespace valgroup::testctx;

namespace {

const char* kSpec = R"(# reference contexts
group C2 = cyclic(2)
group C3 = cyclic(3)
group C4 = cyclic(4)
group C6 = cyclic(6)
subgroup A1 = C4.generated(2)
subgroup A2 = C6.generated(3)
iso phi = A1 -> A2 { 2 -> 3 }
subgroup HA = C4.generated(2)
iso hid = HA -> HA { 2 -> 2 }
subgroup FA = C4.generated(1)
iso finv = FA -> FA { 1 -> 3 }
valuated P = free_product(C2, C3)
valuated F2 = free(2)
valuated Q = free_product(C3, C3)
valuated M = amalgam(C4, C6; A1~A2 via phi)
valuated H = hnn(C4; HA~HA via hid)
valuated H2 = hnn(C4; FA~FA via finv)
)";

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

std::string spec_path() {
  static std::string path = [] {
    std::string p = "/tmp/valgroup_cli_test.vg";
    std::ofstream f(p);
    f << kSpec;
    return p;
  }();
  return path;
}

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spec parsing") {
  SpecFile spec = parse_spec(kSpec);
  CHECK(spec.contexts.size() == 6);
  CHECK(spec.primary() == spec.context("P"));
  CHECK(spec.context("M")->kind == ContextKind::Amalgam);
  CHECK(spec.context("H2")->kind == ContextKind::Hnn);
  CHECK(spec.groups.at("C6")->order == 6);

  CHECK_THROWS_AS(spec.context("nope"), Error);
  CHECK_THROWS_AS(parse_spec("group X = cyclic(2)\n").primary(), Error);

  try {
    parse_spec("group C2 = cyclic(2)\nsubgroup S = C9.generated(1)\n");
    FAIL("parse error expected");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("word round trip") {
  SpecFile spec = parse_spec(kSpec);
  for (const auto& [name, ctx] : spec.contexts) {
    Ball ball = enumerate_ball(*ctx, 2);
    for (const GroupElement& g : ball.elements) {
      std::string text = render_word(g);
      CHECK(parse_word(*ctx, text) == g);
    }
  }
  auto p = spec.context("P");
  CHECK(parse_word(*p, "1") == identity_element(*p));
  CHECK(parse_word(*p, "x y^2") == w(p, "x y2"));
  CHECK_THROWS_AS(parse_word(*p, "q"), Error);
  CHECK_THROWS_AS(parse_word(*p, "x5"), Error);
}

TEST_CASE("check-axioms exit codes") {
  CliRun ok = run_cli({"check-axioms", "--group", spec_path(), "--context", "P",
                       "--radius", "3", "--axioms", "A1,A2,A3,A4"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("holds_up_to_radius") != std::string::npos);

  CliRun bad = run_cli({"check-axioms", "--group", spec_path(), "--context", "P",
                        "--radius", "3", "--axioms", "A0"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("violated") != std::string::npos);
  CHECK(bad.out.find("x") != std::string::npos);
}

TEST_CASE("records output is deterministic and well-formed") {
  std::vector<std::string> args{"check-axioms", "--group", spec_path(), "--context", "P",
                                "--radius", "3", "--axioms", "A0", "--format", "records"};
  CliRun first = run_cli(args);
  CliRun second = run_cli(args);
  CHECK(first.exit_code == second.exit_code);
  CHECK(first.out == second.out);

  std::istringstream lines(first.out);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("command=", 0) == 0);
    CHECK(line.find(" group=") != std::string::npos);
    CHECK(line.find(" radius=") != std::string::npos);
    CHECK(line.find(" status=") != std::string::npos);
    CHECK(line.find(" witnesses=[") != std::string::npos);
    CHECK(line.find(" counts={") != std::string::npos);
    CHECK(line.find(" timing_ms=") != std::string::npos);
    // fixed field order
    CHECK(line.find(" group=") < line.find(" radius="));
    CHECK(line.find(" radius=") < line.find(" status="));
    CHECK(line.find(" status=") < line.find(" witnesses=["));
    CHECK(line.find(" witnesses=[") < line.find(" counts={"));
    CHECK(line.find(" counts={") < line.find(" timing_ms="));
  }
}

TEST_CASE("verbs run end to end") {
  CHECK(run_cli({"normal-form", "--group", spec_path(), "--context", "P",
                 "--word", "x y x"}).exit_code == 0);
  CHECK(run_cli({"cyclic-reduce", "--group", spec_path(), "--context", "P",
                 "--word", "x y x"}).exit_code == 0);
  CHECK(run_cli({"conjugacy", "--group", spec_path(), "--context", "P",
                 "--y", "x y x y", "--z", "y x y x", "--max-conjugator", "3"}).exit_code == 0);
  CHECK(run_cli({"centralizer", "--group", spec_path(), "--context", "P",
                 "--g", "x y", "--radius", "6"}).exit_code == 0);
  CHECK(run_cli({"commute-decompose", "--group", spec_path(), "--context", "P",
                 "--x", "x y", "--y", "x y x y", "--radius", "6"}).exit_code == 0);
  CHECK(run_cli({"nielsen", "--group", spec_path(), "--context", "F2",
                 "--gens", "a a;a a a", "--nmax", "4"}).exit_code == 0);
  CHECK(run_cli({"csa", "--group", spec_path(), "--context", "Q",
                 "--radius", "3"}).exit_code == 0);
  CHECK(run_cli({"csa", "--group", spec_path(), "--context", "P",
                 "--radius", "3"}).exit_code == 1);
  CHECK(run_cli({"subgroup-probe", "--group", spec_path(), "--context", "P",
                 "--gens", "x", "--radius", "3"}).exit_code == 0);
  CHECK(run_cli({"ball-stats", "--group", spec_path(), "--context", "M",
                 "--radius", "3"}).exit_code == 0);
}

TEST_CASE("usage and capacity errors") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate", "--group", spec_path()}).exit_code == 2);
  CHECK(run_cli({"check-axioms", "--group", spec_path(), "--unknown-flag"}).exit_code == 2);
  CHECK(run_cli({"check-axioms", "--group", "/nonexistent.vg"}).exit_code == 2);
  CHECK(run_cli({"normal-form", "--group", spec_path(), "--context", "P",
                 "--word", "zz"}).exit_code == 2);
  CHECK(run_cli({"check-axioms", "--group", spec_path(), "--context", "P",
                 "--axioms", "A9"}).exit_code == 2);

  CliRun cap = run_cli({"ball-stats", "--group", spec_path(), "--context", "F2",
                        "--radius", "4", "--cap", "10"});
  CHECK(cap.exit_code == 3);

  CliRun help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
}
