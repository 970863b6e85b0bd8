#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using drwkit::cli::run;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}
}  // namespace

TEST_CASE("golden files") {
  std::size_t cases = 0;
  for (const auto& entry : fs::directory_iterator(GOLDEN_DIR)) {
    if (entry.path().extension() != ".args") continue;
    ++cases;
    auto args = read_lines(entry.path());
    auto expected = read_lines(fs::path(entry.path()).replace_extension(".out"));
    REQUIRE(!expected.empty());
    Result r = call(args);
    std::string want;
    for (std::size_t k = 1; k < expected.size(); ++k) want += expected[k] + "\n";
    if (want == "\n") want.clear();
    INFO(entry.path().filename().string());
    CHECK(std::to_string(r.code) == expected[0]);
    CHECK(r.out == want);
  }
  CHECK(cases >= 30);
}

TEST_CASE("documented examples") {
  CHECK(call({"witt", "add", "-p", "3", "-n", "2", "[1,0]", "[1,0]"}).out == "[2, -2]\n");
  CHECK(call({"pdim", "tower", "Fp|+t1|+t2"}).out == "2\n");
  Result c = call({"certify", "drw", "-p", "3", "-n", "2", "--format", "machine"});
  CHECK(c.code == 0);
  CHECK(c.out.find("nonzero=true\n") != std::string::npos);
  CHECK(c.out.find("witness=2*dV(1)\n") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  Result r = call({"witt", "unghost", "-p", "3", "-n", "2", "[1, 2]"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("NotInGhostImage", 0) == 0);
  r = call({"symbol", "steinberg", "-p", "3", "-n", "2", "1+eps"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("NotAUnit", 0) == 0);
  r = call({"pdim", "algebra", "-m", "2", "1"});
  CHECK(r.err.rfind("ImproperIdeal", 0) == 0);
  r = call({"cartier", "relative", "-p", "3", "-m", "2", "--relation", "s1", "--relation", "s2"});
  CHECK(r.err.rfind("NotMonogenic", 0) == 0);
  CHECK(call({"witt", "add", "-p", "3", "-n", "2", "[1,0"}).code == 2);
  CHECK(call({"witt", "add", "-p", "3", "-n", "2", "[1,x]", "[1,0]"}).code == 2);
  CHECK(call({"cartier", "d", "-p", "3", "dx0 + x0"}).code == 2);
  CHECK(call({"witt"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"witt", "add", "--bogus"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"witt", "teich", "-p", "4", "-n", "2", "1"}).code == 1);
}

TEST_CASE("output feeds back as input") {
  auto strip = [](std::string s) { return s.substr(0, s.size() - 1); };
  std::string w = strip(call({"witt", "mul", "-p", "3", "-n", "3", "[1,2,0]", "[2,1/2,1]"}).out);
  CHECK(call({"witt", "sub", "-p", "3", "-n", "3", w, w}).out == "[0, 0, 0]\n");
  std::string f = strip(call({"drw", "dteich", "-p", "3", "-n", "3", "4"}).out);
  CHECK(call({"drw", "scale", "-p", "3", "-n", "3", "1", f}).out == f + "\n");
  std::string e = strip(call({"drw", "eps-dteich", "-p", "3", "-n", "3", "2+eps"}).out);
  CHECK(call({"drw", "eps-add", "-p", "3", "-n", "3", "-i", "1", e, "0"}).out == e + "\n");
  std::string g = strip(call({"cartier", "gamma", "-p", "3", "-r", "2", "(x0 + x1) dx0^dx1"}).out);
  CHECK(call({"cartier", "d", "-p", "3", "-r", "2", g}).out == "0\n");
}

TEST_CASE("deterministic output") {
  std::vector<std::string> args{"symbol", "sweep", "-p", "3", "-n", "2", "--format", "machine"};
  CHECK(call(args).out == call(args).out);
}
