#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sympf/cli.hpp"

using namespace sympf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("count and dim") {
  auto r = run({"count", "--n", "4", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  r = run({"dim", "--n", "4", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "14\n");
  r = run({"dim", "--n", "6", "--degree", "1", "--field", "fp:7", "--report", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "dim");
  CHECK(j["failures"].empty());
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "4", "--shape", "2", "--report", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"].size() == 5);
  r = run({"enumerate", "--n", "4", "--shape", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("verify, sample and chart") {
  auto r = run({"verify", "--n", "4", "--points", "10", "--seed", "1"});
  CHECK(r.code == 0);
  r = run({"verify", "--n", "6", "--points", "2", "--seed", "5", "--report", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["failures"].empty());
  r = run({"sample", "--n", "4", "--seed", "3"});
  CHECK(r.code == 0);
  r = run({"chart", "--n", "8", "--count", "3", "--seed", "2"});
  CHECK(r.code == 0);
  r = run({"chart", "--n", "6"});
  CHECK(r.code == 2);
}

TEST_CASE("straighten from a file") {
  const auto in = temp_file("sympf_cli_input.json", R"([{"coeff":"1","tableau":[[2,3],[1,4]]}])");
  auto r = run({"straighten", "--n", "8", "--mode", "dcp", "--input", in, "--report", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["combo"].size() == 3);

  const auto in2 = temp_file("sympf_cli_input2.json", R"([{"coeff":"1","tableau":[[1,2,-1,-2]]}])");
  r = run({"straighten", "--n", "4", "--input", in2, "--report", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["results"][0]["combo"].empty());

  const auto bad = temp_file("sympf_cli_bad.json", R"({"terms":[]})");
  CHECK(run({"straighten", "--n", "4", "--input", bad}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"count", "--n", "5", "--degree", "1"}).code == 2);
  CHECK(run({"count", "--degree", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dim", "--n", "6", "--degree", "1", "--field", "fp:3"}).code == 2);
  CHECK(run({"dim", "--n", "16", "--degree", "6"}).code == 2);
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "4", "--points", "3", "--seed", "9", "--report", "json"},
           {"sample", "--n", "6", "--seed", "4", "--report", "json"},
           {"chart", "--n", "4", "--count", "4", "--seed", "4", "--report", "json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "sympf_cli_out.txt").string();
  std::filesystem::remove(path);
  CHECK(run({"count", "--n", "4", "--degree", "2", "--output", path}).code == 0);
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text == "14\n");
}
