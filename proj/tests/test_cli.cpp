// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "frz/json_io.hpp"
#include "test_support.hpp"

using frz::GaussRational;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

RunResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("JSON round-trips are bit-exact") {
  std::mt19937_64 rng(7070);
  frz::QuidditySeq q{GaussRational(2), GaussRational(1, 2), GaussRational(mpq_class(-3), mpq_class(5, 7))};
  CHECK(frz::sequence_from_json(frz::to_json(q)) == q);

  for (int trial = 0; trial < 20; ++trial) {
    frz::SquareMatrix m = frz::testing::random_matrix(1 + trial % 3, rng, true);
    CHECK(frz::matrix_from_json(frz::to_json(m)) == m);
  }

  frz::MatrixList ms{frz::SquareMatrix::identity(2), -frz::SquareMatrix::identity(2)};
  CHECK(frz::matrix_list_from_json(frz::to_json(ms)) == ms);

  frz::BiSequence b({frz::SquareMatrix::identity(1)}, {-frz::SquareMatrix::identity(1)});
  frz::BiSequence rb = frz::bisequence_from_json(frz::to_json(b));
  CHECK(rb.p == b.p);
  CHECK(rb.q == b.q);

  frz::Dissection d(5, {{1, 4}, {2, 4}});
  CHECK(frz::dissection_from_json(frz::to_json(d)) == d);

  CHECK_THROWS_AS(frz::sequence_from_json(json{{"wrong", 1}}), frz::ParseError);
  CHECK_THROWS_AS(frz::matrix_from_json(json{{"l", 2}, {"entries", json::array()}}),
                  frz::ParseError);
  CHECK_THROWS_AS(frz::parse_json("{not json"), frz::ParseError);
  CHECK_THROWS_AS(frz::sequence_from_json(json::parse(R"({"entries":[1]})")), frz::ParseError);
}

TEST_CASE("fixture corpus reproduces expected outputs byte-exactly") {
  json cases = json::parse(read_file(std::string(FIXTURES_DIR) + "/cases.json"));
  REQUIRE(cases.is_array());
  REQUIRE(cases.size() >= 30);
  for (const auto& c : cases) {
    std::string name = c.at("name").get<std::string>();
    CAPTURE(name);
    std::vector<std::string> args;
    for (const auto& a : c.at("args")) args.push_back(a.get<std::string>());
    RunResult r = run_cli(args);
    CHECK(r.exit_code == c.at("exit").get<int>());
    CHECK(r.out == read_file(std::string(FIXTURES_DIR) + "/" + name + ".out"));
  }
}

TEST_CASE("exit codes distinguish validation from mathematical failure") {
  CHECK(run_cli({"verify", R"({"entries":["1","1","1"]})"}).exit_code == 0);
  CHECK(run_cli({"verify", R"({"entries":["1","1","1","1"]})"}).exit_code == 1);
  CHECK(run_cli({"verify", R"({"entries":["x"]})"}).exit_code == 2);
  CHECK(run_cli({"verify", "{broken"}).exit_code == 2);
  CHECK(run_cli({"no-such-subcommand"}).exit_code == 2);
  CHECK(run_cli({"compose", "--op", "circ", "--index", "9",
                 R"({"entries":["1","1","1"]})", R"({"entries":["1","1","1"]})"})
            .exit_code == 2);
}

TEST_CASE("text format and stdin input") {
  RunResult r = run_cli({"--format", "text", "verify", R"({"entries":["1","1","1"]})"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 7) == "MinusId");

  // Determinism: repeated runs are byte-identical.
  std::vector<std::string> args{"enumerate", "--kind", "tri", "--n", "6"};
  CHECK(run_cli(args).out == run_cli(args).out);
}
