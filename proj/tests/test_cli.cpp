#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "conealg/cli.hpp"
#include "conealg/io.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "conealg");
  std::ostringstream out, err;
  const int code = conealg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::string> lines(const std::string& text) {
  std::set<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.insert(line);
  return out;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = std::string(P_tmpdir) + "/" + name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("generators from monomial strings") {
  const auto r = run({"generators", "--ideal-i", "x^5*y^2", "--ideal-j", "x^2*y^3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::set<std::string>{"x^5*y^2*u", "x^10*y^4*u^2*v", "x^15*y^6*u^3*v^2",
                                              "x^5*y^3*u*v", "x^5*y^6*u*v^2", "x^2*y^3*v",
                                              "x^6*y^9*u*v^3", "x^10*y^15*u^2*v^5"});
  CHECK(r.err.empty());
}

TEST_CASE("generators from exponent vectors") {
  const auto r = run({"generators", "--a", "1", "--b", "1", "--vars", "x"});
  CHECK(r.code == 0);
  CHECK(r.out == "x*v\nx*u*v\nx*u\n");
  const auto numbered = run({"generators", "--a", "5,2", "--b", "2,3"});
  CHECK(numbered.out.rfind("x1^2*x2^3*v\n", 0) == 0);
}

TEST_CASE("json output round trips and is byte stable") {
  const std::vector<std::string> args{"generators", "--a", "5,2", "--b", "2,3", "--vars", "x,y", "--format", "json"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(conealg::generators_to_json(conealg::generators_from_json(first.out)) == first.out);
}

TEST_CASE("exit codes") {
  const auto parse = run({"generators", "--ideal-i", "x+y", "--ideal-j", "x"});
  CHECK(parse.code == conealg::cli::kInputError);
  CHECK(parse.err == "error: --ideal-i: not a monomial at column 2\n");

  CHECK(run({"generators", "--a", "1,2", "--b", "1"}).code == conealg::cli::kInputError);
  CHECK(run({"generators", "--a", "0", "--b", "0"}).code == conealg::cli::kInputError);
  CHECK(run({"generators", "--a", "x", "--b", "1"}).code == conealg::cli::kInputError);
  CHECK(run({"generators", "--ideal-i", "x^99999999999999999999", "--ideal-j", "x"}).code ==
        conealg::cli::kOverflow);
  // 2^62 * 2 no longer fits in 64 bits.
  CHECK(run({"verify", "--a", "4611686018427387904", "--b", "4611686018427387904", "--rmax", "2",
             "--smax", "2"}).code == conealg::cli::kOverflow);
  CHECK(run({"no-such-command"}).code == conealg::cli::kInputError);
  CHECK(run({}).code == conealg::cli::kInputError);
  CHECK(run({"--help"}).code == conealg::cli::kOk);
}

TEST_CASE("hilbert-basis command") {
  const auto r = run({"hilbert-basis", "--ray", "0,1", "--ray", "2,5"});
  CHECK(r.code == 0);
  CHECK(r.out == "(0,1) (1,3) (2,5)\n");
  CHECK(run({"hilbert-basis", "--ray", "0,0", "--ray", "2,5"}).code == conealg::cli::kInputError);
  CHECK(run({"hilbert-basis", "--ray", "0,1"}).code == conealg::cli::kInputError);
  const auto json = run({"hilbert-basis", "--ray", "3,2", "--ray", "2,5", "--format", "json"});
  CHECK(json.out.find("\"format_version\": 1") != std::string::npos);
}

TEST_CASE("fan command orders its input") {
  const auto r = run({"fan", "--a", "2,5", "--b", "3,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "C0: (0,1) (2,5) | H: (0,1) (1,3) (2,5)\n"
                 "C1: (2,5) (3,2) | H: (2,5) (1,2) (1,1) (3,2)\n"
                 "C2: (3,2) (1,0) | H: (3,2) (2,1) (1,0)\n");
  const auto svg = run({"fan", "--a", "5,2", "--b", "2,3", "--format", "svg"});
  CHECK(svg.out == run({"fan", "--a", "5,2", "--b", "2,3", "--format", "svg"}).out);
  CHECK(svg.out.find("</svg>") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto ok = run({"verify", "--a", "5,2", "--b", "2,3", "--rmax", "15", "--smax", "15"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "PASS 256/256 components\n");
  const auto bad = run({"verify", "--a", "5,2", "--b", "2,3", "--drop", "0,1"});
  CHECK(bad.code == conealg::cli::kVerificationFailed);
  CHECK(bad.out.rfind("FAIL at (0,1)", 0) == 0);
}

TEST_CASE("limits command") {
  const auto r = run({"limits", "--a", "5,2", "--b", "2,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "l_I(J)=2/5 L_I(J)=3/2 l_J(I)=2/3 L_J(I)=5/2\n");
  CHECK(run({"limits", "--a", "1,0", "--b", "1,1"}).code == conealg::cli::kInputError);
}

TEST_CASE("semigroup command") {
  const auto r = run({"semigroup", "--a", "1", "--b", "1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::set<std::string>{"(1,1,0)", "(1,0,1)", "(1,1,1)", "(1,0,0)"});
}

TEST_CASE("fan-algebra command") {
  const std::string spec = temp_file("conealg_cli_diagonal.json", R"({
  "variables": ["x", "y"], "a": [1], "b": [1],
  "ideals": [["x", "y"]], "pieces": [[[1, 2], [2, 1]]]
})");
  const auto r = run({"fan-algebra", "--spec", spec, "--verify", "10"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).count("x^3*u*v") == 1);
  CHECK(lines(r.out).count("PASS 121/121 components") == 1);

  const auto json = run({"fan-algebra", "--spec", spec, "--format", "json", "--verify", "4"});
  CHECK(json.code == 0);
  CHECK(conealg::generators_from_json(json.out).generators.size() == 10);
  CHECK(json.err == "PASS 25/25 components\n");

  const std::string broken = temp_file("conealg_cli_broken.json", "{\"variables\": [");
  const auto bad = run({"fan-algebra", "--spec", broken});
  CHECK(bad.code == conealg::cli::kInputError);
  CHECK(bad.err.rfind("error: invalid JSON at line 1", 0) == 0);
  CHECK(run({"fan-algebra", "--spec", "/nonexistent/spec.json"}).code == conealg::cli::kInputError);

  ::setenv("CONEALG_MAX_CANDIDATES", "3", 1);
  CHECK(run({"fan-algebra", "--spec", spec}).code == conealg::cli::kOverflow);
  ::unsetenv("CONEALG_MAX_CANDIDATES");
  std::remove(spec.c_str());
  std::remove(broken.c_str());
}
