#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcx/cli.hpp"
#include "mcx/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mcx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "involutions", "--n", "4"}).out == "32400\n");
  CHECK(run({"count", "automorphisms", "--n", "3"}).out == "384\n");
  CHECK(run({"count", "r-involutions", "--n", "3", "--r", "3"}).out == "33\n");
  CHECK(run({"count", "preserving", "--n", "3"}).out == "44\n");
  CHECK(run({"count", "signed-r-involutions", "--N-symbols", "5"}).out == "312\n");
  const auto j = run({"count", "involutions", "--n", "5", "--format", "json"});
  CHECK(j.code == 0);
  const auto parsed = mcx::Json::parse(j.out);
  CHECK(parsed["value"] == "50305536256");
  CHECK(parsed["n"] == 5);
}

TEST_CASE("errors") {
  const auto zero = run({"count", "involutions", "--n", "0"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("error:") != std::string::npos);
  CHECK(run({"count", "involutions", "--n", "17"}).code == 1);
  CHECK(run({"count", "involutions", "--n", "17", "--budget", "17"}).code == 0);
  CHECK(run({"count", "r-involutions", "--n", "3"}).code == 1);
  const auto bad = run({"count", "involutions", "--bogus"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"enumerate", "automorphisms", "--n", "5"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table formats") {
  CHECK(run({"table", "--max-n", "3"}).out == "| n | F(n) |\n|---|---|\n| 1 | 2 |\n| 2 | 6 |\n| 3 | 76 |\n");
  CHECK(run({"table", "--max-n", "2", "--format", "csv"}).out == "n,F(n)\n1,2\n2,6\n");
  const auto j = mcx::Json::parse(run({"table", "--max-n", "4", "--format", "json"}).out);
  CHECK(j.size() == 4);
  CHECK(j[3]["F"] == "32400");
}

TEST_CASE("format from the environment") {
  setenv("MCX_FORMAT", "csv", 1);
  CHECK(run({"table", "--max-n", "1"}).out == "n,F(n)\n1,2\n");
  CHECK(run({"count", "involutions", "--n", "1"}).out == "2\n");
  CHECK(run({"table", "--max-n", "1", "--format", "markdown"}).out.starts_with("| n |"));
  unsetenv("MCX_FORMAT");
}

TEST_CASE("enumerate") {
  const auto j = mcx::Json::parse(run({"enumerate", "involutions", "--n", "2"}).out);
  CHECK(j.size() == 6);
  const auto s = run({"enumerate", "special", "--n", "2", "--kind", "idempotent", "--format", "csv"});
  CHECK(s.code == 0);
  CHECK(s.out.starts_with("1,i1,i2,i1*i2\n"));
  CHECK(s.out.find("\"1/2\"") != std::string::npos);
  std::size_t lines = 0;
  for (char c : s.out) lines += c == '\n';
  CHECK(lines == 5);
  const auto p = mcx::Json::parse(run({"enumerate", "preserving", "--n", "3"}).out);
  CHECK(p.size() == 44);
  // Same bytes on every run.
  CHECK(run({"enumerate", "r-involutions", "--n", "3", "--r", "3"}).out ==
        run({"enumerate", "r-involutions", "--n", "3", "--r", "3"}).out);
}

TEST_CASE("apply") {
  const auto path = std::filesystem::temp_directory_path() / "mcx_cli_apply.json";
  {
    std::ofstream f(path);
    f << R"({"n": 3, "coeffs": {"i1": "1"}})";
  }
  const auto r = run({"apply", "--n", "3", "--perm", "3,-2,4,1", "--input", path.string()});
  std::filesystem::remove(path);
  REQUIRE(r.code == 0);
  const auto j = mcx::Json::parse(r.out);
  CHECK(j["coeffs"] == mcx::Json::parse(R"({"i1": "1/2", "i2": "1/2", "i3": "1/2", "i1*i2*i3": "1/2"})"));
  CHECK(run({"apply", "--n", "3", "--perm", "3,-2,4", "--input", path.string()}).code == 1);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "special", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(mcx::Json::parse(r.out)["passed"] == true);
}
