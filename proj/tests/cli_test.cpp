#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bnskein/cli.hpp"
#include "bnskein/errors.hpp"
#include "bnskein/evaluators.hpp"
#include "bnskein/ring.hpp"
#include "bnskein/state.hpp"

using bnskein::ParseError;
using bnskein::core::State;
using bnskein::core::SurfaceComponent;
using bnskein::ring::Rational;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = bnskein::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("eval-s3 prints the empty-surface coefficient") {
  CHECK(run({"eval-s3", "(1,0)"}).out == "2 * empty\n");
  CHECK(run({"eval-s3", "(0,1)"}).out == "1 * empty\n");
  CHECK(run({"eval-s3", "(1,0),(1,0),(0,1)"}).out == "4 * empty\n");
  CHECK(run({"eval-s3", "(0,0)"}).out == "0\n");
  CHECK(run({"eval-s3", "(2,0)"}).out == "0\n");
  CHECK(run({"eval-s3", "[(1,0),(0,1)]"}).out == "2 * empty\n");
  CHECK(run({"eval-s3", "(1,0)"}).code == 0);

  RunResult machine = run({"eval-s3", "(1,0)", "--format=machine"});
  CHECK(machine.code == 0);
  CHECK(State::parse(machine.out) == State::term({}, Rational(2)));
}

TEST_CASE("normalize subcommands print canonical basis elements") {
  CHECK(run({"normalize-s1s2", "k=1", "dots=1"}).out == "1 * e0\n");
  CHECK(run({"normalize-s1s2", "k=3", "dots=1,2"}).out ==
        bnskein::evals::normalize_s1xs2({3, {1, 2}, {}}).to_string() + "\n");
  CHECK(run({"normalize-s1s2", "k=2", "extras=(0,1)"}).out ==
        bnskein::evals::normalize_s1xs2({2, {}, {{0, 1}}}).to_string() + "\n");
  CHECK(run({"normalize-t3", "dir=1,0,0", "k=2"}).out == "1 * T[1,0,0]^2\n");
  CHECK(run({"normalize-t3", "dir=1,0,0", "k=1", "dots=1"}).out == "1 * dT[1,0,0]\n");
  CHECK(run({"normalize-t3", "dir=1,0,0", "k=2", "dots=1"}).out == "0\n");

  RunResult machine = run({"normalize-s1s2", "k=3", "dots=1,2", "--format=machine"});
  CHECK(machine.code == 0);
  CHECK(State::parse(machine.out) ==
        bnskein::evals::basis_to_state(bnskein::evals::normalize_s1xs2({3, {1, 2}, {}})));
}

TEST_CASE("mbn subcommands") {
  RunResult families = run({"mbn-solve"});
  CHECK(families.code == 0);
  CHECK(families.out.find("z=1/2, xy=1/4") != std::string::npos);
  CHECK(families.out.find("y=0, z=1") != std::string::npos);
  CHECK(families.out.find("y=0, z=0") != std::string::npos);

  RunResult eval = run({"mbn-eval", "b=2", "comps=(2,1,00;0,0,11)"});
  CHECK(eval.code == 0);
  CHECK(eval.out.find("[11]") != std::string::npos);

  CHECK(run({"mbn-eval", "b=2", "comps=(2,0,000)"}).code == 2);
  CHECK(run({"mbn-eval", "b=2", "comps=(1,0,00)"}).code == 1);
}

TEST_CASE("sbn subcommands") {
  CHECK(run({"sbn-normalize", "g=1", "stacks=10:2:0", "regions=0,0"}).out ==
        "+TypeA[e=10](n=2)\n");
  CHECK(run({"sbn-normalize", "g=1", "stacks=10:2:1", "regions=0,0"}).out ==
        "-TypeA[e=10](n=2)\n");
  CHECK(run({"sbn-normalize", "g=1", "stacks=00:1:0", "regions=0/0"}).out == "0\n");
  CHECK(run({"sbn-dim", "g=1", "n=2"}).out == "16\n");
  CHECK(run({"sbn-dim", "g=1", "n=2", "--exclude-zero-class"}).out == "9\n");
  CHECK(run({"sbn-dim", "g=2", "n=3"}).out == "240\n");
}

TEST_CASE("seifert subcommands") {
  RunResult report = run({"seifert-report", "g=1", "fibers=(3,1);(5,2)", "horiz=f:1:0"});
  CHECK(report.code == 0);
  CHECK(report.out.find("base genus 1, 2 singular fibers") != std::string::npos);
  CHECK(report.out.find("graded dimensions n=1..4: 4 16 12 16") != std::string::npos);
  CHECK(report.out.find("f: degree 1, genus 0") != std::string::npos);

  CHECK(run({"seifert-report", "g=0"}).code == 0);
  CHECK(run({"horiz-normalize", "f=f", "k=3", "dots=1,2"}).out == "1 * f^1\n");
  CHECK(run({"horiz-normalize", "f=f", "k=1", "dots=1", "genus=1", "degree=2"}).out ==
        "1 * d_f\n");
  CHECK(run({"horiz-normalize", "f=f", "k=1", "dots=1,1"}).out == "0\n");
}

TEST_CASE("state-echo round-trips a file") {
  const std::string path = "cli_echo_test.txt";
  write_file(path,
             "# leading comment\n"
             "\n"
             "-3 * [vt#00:1:0, es#01:0:0]\n"
             "1/2 * [es#02:0:1]\n");
  RunResult first = run({"state-echo", path});
  CHECK(first.code == 0);
  State expected = State::term({SurfaceComponent{"es#02", 0, 1}}, Rational(1, 2)) +
                   State::term({SurfaceComponent{"vt#00", 1, 0},
                                SurfaceComponent{"es#01", 0, 0}},
                               Rational(-3));
  CHECK(State::parse(first.out) == expected);

  write_file(path, first.out);
  RunResult second = run({"state-echo", path});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  std::remove(path.c_str());
}

TEST_CASE("state-echo reports parse failures with line numbers") {
  const std::string path = "cli_echo_bad.txt";
  write_file(path, "1 * [a:0:0]\n1 * [a:0]\n");
  RunResult bad = run({"state-echo", path});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run({"state-echo", "no_such_file.txt"}).code == 2);
}

TEST_CASE("parse_state_file matches the grammar") {
  const std::string path = "cli_parse_test.txt";
  write_file(path, "1 * []\n");
  CHECK(bnskein::cli::parse_state_file(path) == State::term({}, Rational(1)));

  write_file(path, "0\n");
  CHECK(bnskein::cli::parse_state_file(path).is_zero());

  write_file(path, "0\n1 * [a:0:0]\n");
  CHECK_THROWS_AS(bnskein::cli::parse_state_file(path), ParseError);

  write_file(path, "# only comments\n");
  CHECK_THROWS_AS(bnskein::cli::parse_state_file(path), ParseError);
  std::remove(path.c_str());
}

TEST_CASE("usage and error exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--help"}).out.find("sbn-normalize") != std::string::npos);
  CHECK(run({"eval-s3", "--help"}).code == 0);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"eval-s3"}).code == 2);
  CHECK(run({"eval-s3", "(1,0)", "(0,1)"}).code == 2);
  CHECK(run({"eval-s3", "1,0"}).code == 2);
  CHECK(run({"normalize-s1s2"}).code == 2);
  CHECK(run({"normalize-s1s2", "k=two"}).code == 2);
  CHECK(run({"normalize-s1s2", "k=1", "bogus=3"}).code == 2);
  CHECK(run({"normalize-s1s2", "k=1", "--bogus"}).code == 2);
  CHECK(run({"normalize-t3", "dir=1,0", "k=1"}).code == 2);
  CHECK(run({"sbn-normalize", "g=1", "stacks=10:0:0", "regions=0,0"}).code == 2);
  CHECK(run({"sbn-normalize", "g=1", "stacks=10:1:5", "regions=0,0"}).code == 1);
  CHECK(run({"horiz-normalize", "f=f", "k=1", "dots=3"}).code == 1);
  CHECK(run({"seifert-report", "g=0", "fibers=(1,1)"}).code == 1);
  CHECK(run({"no-such-command"}).err.find("unknown subcommand") != std::string::npos);
}
