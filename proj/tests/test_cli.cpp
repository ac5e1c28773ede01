#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ldlab/cli.hpp"
#include "ldlab/errors.hpp"

using namespace ldlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden files") {
  namespace fs = std::filesystem;
  std::vector<fs::path> cmds;
  for (const auto& e : fs::directory_iterator(LDLAB_GOLDEN_DIR))
    if (e.path().extension() == ".cmd") cmds.push_back(e.path());
  std::sort(cmds.begin(), cmds.end());
  REQUIRE(cmds.size() >= 10);
  for (const auto& c : cmds) {
    CAPTURE(c.filename().string());
    const auto args = nlohmann::json::parse(slurp(c)).get<std::vector<std::string>>();
    fs::path expected = c;
    expected.replace_extension(".out");
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(expected));
  }
}

TEST_CASE("documented examples") {
  CHECK(run({"laver", "table", "--n", "2", "--format", "csv"}).out == "2,4,2,4\n3,4,3,4\n4,4,4,4\n1,2,3,4\n");
  CHECK(run({"order", "rank3", "1 2 1"}).out == "w^2+1\n");
  CHECK(run({"order", "compare", "--strands", "3", "", ""}).out == "=\n");
  CHECK(run({"braid", "eq", "--strands", "3", "1 2 -1", "-2 1 2"}).out == "true\n");
  CHECK(run({"color", "count", "--rack", "dihedral:3", "--strands", "2", "1 1 1"}).out == "9\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"laver", "table", "--n", "x"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"braid", "nf", "--strands", "3", "3"}).code == 2);
  const Run dom = run({"conj", "mu", "--strands", "3", "2 -1"});
  CHECK(dom.code == 1);
  CHECK(dom.err.find("positive") != std::string::npos);
  CHECK(run({"color", "act", "--rack", "laver:2", "--colors", "1,1", "1 -1"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("laver") != std::string::npos);
}

TEST_CASE("JSON envelope") {
  const Run r = run({"laver", "period", "--n", "3", "--p", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "laver.period/1");
  CHECK(j["data"]["period"] == 4);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::string> a{"conj", "sweep-conjecture", "--maxlen", "3"};
  CHECK(run(a).out == run(a).out);
}

TEST_CASE("game checkpoint through files") {
  const auto path = (std::filesystem::temp_directory_path() / "ldlab_cli_ck.json").string();
  const Run a = run({"game", "g3", "1 1 2 2 1 1", "--cap", "1000", "--save", path});
  CHECK(a.out == "aborted at=1000\n");
  const Run b = run({"game", "g3", "--resume", path, "--cap", "2000000000000000"});
  CHECK(b.out == "steps=90159953477630\n");
  std::filesystem::remove(path);
}

TEST_CASE("rack specifiers") {
  CHECK(parse_rack_spec("dihedral:3").size() == 3);
  CHECK(parse_rack_spec("affine:5:2").size() == 5);
  CHECK(parse_rack_spec("laver:3").size() == 8);
  CHECK(parse_rack_spec("trivial:2").size() == 2);
  CHECK_THROWS_AS(parse_rack_spec("dihedral"), ParseError);
  CHECK_THROWS_AS(parse_rack_spec("cube:3"), ParseError);
  CHECK_THROWS_AS(parse_rack_spec("affine:5"), ParseError);
  CHECK(parse_colour_list("1, 2,3") == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(parse_colour_list("1,,2"), ParseError);
}
