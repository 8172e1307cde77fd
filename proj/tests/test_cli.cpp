// End-to-end checks on the command-line binary: exit codes, printed
// normal forms, JSON shape, and the parse -> print -> parse round trip.

#include <catch2/catch_amalgamated.hpp>

#include <spbw/jsonio.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "fixtures.hpp"

using namespace spbw;
using nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

// Runs the CLI with stderr dropped; rc is the process exit code.
RunResult run(const std::string& args) {
  std::string cmd = std::string(SPBW_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), f))
    r.out.append(buf.data(), got);
  int status = pclose(f);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) {
  return std::string(SPBW_CORPUS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("exit codes cover the whole contract", "[cli]") {
  CHECK(run("validate " + corpus("qplane.spbw")).rc == 0);
  CHECK(run("validate " + corpus("weyl.spbw")).rc == 0);
  CHECK(run("validate " + corpus("diffusion.spbw")).rc == 0);
  CHECK(run("validate " + corpus("dualnum-x.spbw")).rc == 0);
  CHECK(run("validate " + corpus("qplane-dual.spbw")).rc == 0);
  CHECK(run("validate " + corpus("twisted-dual.spbw")).rc == 0);
  CHECK(run("validate " + corpus("weyl-base.spbw")).rc == 0);
  CHECK(run("validate " + corpus("f7-qplane.spbw")).rc == 0);
  CHECK(run("validate " + corpus("commutative3.spbw")).rc == 0);
  CHECK(run("validate " + corpus("weighted.spbw")).rc == 0);

  CHECK(run("validate " + corpus("malformed.spbw")).rc == 1);
  CHECK(run("validate " + corpus("missing-no-such-file.spbw")).rc == 1);
  CHECK(run("nf " + corpus("weyl.spbw") + " 'z*x1'").rc == 1);

  CHECK(run("validate " + corpus("zero-c.spbw")).rc == 2);
  CHECK(run("classify " + corpus("zero-c.spbw")).rc == 2);

  CHECK(run("koszul " + corpus("weighted.spbw") + " classical 4 8").rc == 3);
  CHECK(run("koszul " + corpus("qplane.spbw") + " classical 4 4").rc == 4);
  CHECK(run("koszul " + corpus("weyl.spbw") + " classical 4 8").rc == 5);
  CHECK(run("tensor-check " + corpus("twisted-dual.spbw")).rc == 5);
  CHECK(run("abar " + corpus("weyl.spbw")).rc == 5);
  CHECK(run("hilbert " + corpus("weyl.spbw") + " standard").rc == 5);
}

TEST_CASE("printed normal forms match the defining relations", "[cli]") {
  CHECK(run("nf " + corpus("weyl.spbw") + " 'x2*x1'").out ==
        "(1)·x1^1·x2^1 + (1)\n");
  CHECK(run("nf " + corpus("qplane.spbw") + " 'x2*x1'").out ==
        "(2)·x1^1·x2^1\n");
  CHECK(run("nf " + corpus("diffusion.spbw") + " 'D2*D1'").out ==
        "(1)·D1^1·D2^1 + (-x2)·D1^1 + (x1)·D2^1\n");
  CHECK(run("mul " + corpus("weyl.spbw") + " 'x2' 'x1^2'").out ==
        "(1)·x1^2·x2^1 + (2)·x1^1\n");
  CHECK(run("nf " + corpus("weyl-base.spbw") + " 'x*y'").out ==
        "(y)·x^1 + (1)\n");
}

TEST_CASE("json reports parse and carry the expected verdicts", "[cli]") {
  json cls = json::parse(run("classify " + corpus("diffusion.spbw") + " --json").out);
  CHECK(cls["constant"] == true);
  CHECK(cls["quasi_commutative"] == false);
  CHECK(cls["r_augmented"] == true);
  CHECK(cls["bijective"] == "yes");

  json v = json::parse(run("validate " + corpus("qplane.spbw") + " --json").out);
  CHECK(v["ok"] == true);
  CHECK(v["seed"] == 0x5b90);
  json vs = json::parse(
      run("validate " + corpus("qplane.spbw") + " --json --seed 7").out);
  CHECK(vs["ok"] == true);
  CHECK(vs["seed"] == 7);

  json bad = json::parse(run("validate " + corpus("zero-c.spbw") + " --json").out);
  CHECK(bad["ok"] == false);
  REQUIRE(bad["errors"].size() == 1);
  CHECK(bad["errors"][0] == "relation for (x1, x2) has zero coefficient c");

  json cert = json::parse(
      run("koszul " + corpus("qplane.spbw") + " classical 4 8 --json").out);
  CHECK(cert["verdict"] == "certified-to-bounds");
  CHECK(cert["mode"] == "classical");
  CHECK(cert["bounds"] == json({{"H", 4}, {"D", 8}}));
  REQUIRE(cert["steps"].size() == 5);
  CHECK(cert["steps"][1]["generators"] ==
        json::array({{{"count", 2}, {"degree", 1}}}));
  CHECK(cert["steps"][2]["generators"] ==
        json::array({{{"count", 1}, {"degree", 2}}}));

  json ref = json::parse(
      run("koszul " + corpus("weighted.spbw") + " classical 4 8 --json").out);
  CHECK(ref["verdict"] == "refuted");
  CHECK(ref["witness"] == "step 1 generator in internal degree 2 (expected 1)");

  json big = json::parse(
      run("koszul " + corpus("qplane.spbw") + " r-augmented 3 6 --json").out);
  CHECK(big["steps"][1]["generators"] ==
        json::array({{{"count", 2}, {"degree", json::array({0, 1})}}}));

  json ten = json::parse(
      run("tensor-check " + corpus("diffusion.spbw") + " 2 4 3 --json").out);
  CHECK(ten["ok"] == true);

  json ab = json::parse(run("abar " + corpus("dualnum-x.spbw") + " --json").out);
  CHECK(ab["agree"] == true);
  CHECK(ab["generalized"]["verdict"] == "certified-to-bounds");
  CHECK(ab["classical"]["verdict"] == "certified-to-bounds");

  // Compact emission is stable under a JSON parse -> dump round trip.
  for (const char* c : {"classify", "aug"}) {
    std::string s =
        run(std::string(c) + " " + corpus("diffusion.spbw") + " --json").out;
    CHECK(json::parse(s).dump() + "\n" == s);
  }
}

TEST_CASE("gr output round-trips through the presentation parser", "[cli]") {
  for (const char* name : {"weyl.spbw", "qplane.spbw", "diffusion.spbw",
                           "twisted-dual.spbw", "f7-qplane.spbw"}) {
    Presentation p = parse_presentation_file(corpus(name));
    Presentation expect = associated_quasicommutative(p);
    std::string printed = run(std::string("gr ") + corpus(name)).out;
    Presentation back = parse_presentation_text(printed);
    CAPTURE(name);
    CHECK(fixtures::same_presentation(back, expect));
    CHECK(format_presentation(back) == printed);
  }
}

TEST_CASE("corpus files parse to the library fixtures", "[cli]") {
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("qplane.spbw")), fixtures::qplane()));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("weyl.spbw")), fixtures::weyl()));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("diffusion.spbw")), fixtures::diffusion()));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("dualnum-x.spbw")), fixtures::dual_numbers_poly()));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("qplane-dual.spbw")),
      fixtures::qplane_over_dual()));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("commutative3.spbw")),
      fixtures::commutative(3)));
  CHECK(fixtures::same_presentation(
      parse_presentation_file(corpus("weighted.spbw")), fixtures::weighted_commutative()));
}
