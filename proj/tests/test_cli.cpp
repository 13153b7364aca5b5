#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "smcg/cli.hpp"

using namespace smcg;
using namespace smcg::cli;
using test::covec;
using test::vec;

namespace {
int run_args(std::vector<std::string> args, std::string *out = nullptr) {
  std::ostringstream o, e;
  const int code = run(args, o, e);
  if (out) *out = o.str();
  return code;
}
} // namespace

TEST_SUITE("cli") {

TEST_CASE("element documents round-trip") {
  const JacobiElement g(covec({0, 1}, 24), transvection(vec({1, 0})));
  CHECK(parse_element(emit_element(g)) == g);
  const auto j = element_to_json(g);
  CHECK(j["r"] == 1);
  CHECK(j["modulus"] == 24);
  CHECK(j["A"][0][1] == 1);

  // entries beyond 64 bits travel as decimal strings
  const auto h = test::sp({{2, 1}, {1, 1}});
  SymplecticMatrix a = SymplecticMatrix::identity(Rank(1));
  for (int k = 0; k < 60; ++k) a = a * h;
  const JacobiElement big(covec({3, 5}), a);
  const auto text = emit_element(big);
  CHECK(element_to_json(big)["A"][0][0].is_string());
  CHECK(parse_element(text) == big);
}

TEST_CASE("element documents are validated") {
  CHECK_THROWS_AS(parse_element("{"), DocumentError);
  CHECK_THROWS_AS(parse_element(R"({"r":1,"modulus":0,"x":[0,0]})"), DocumentError);
  CHECK_THROWS_AS(parse_element(R"({"r":1,"modulus":4,"x":[5,0],"A":[[1,0],[0,1]]})"), DocumentError);
  CHECK_THROWS_AS(parse_element(R"({"r":1,"modulus":0,"x":[0,0],"A":[[0,1],[1,0]]})"), DocumentError);
  CHECK_THROWS_AS(parse_element(R"({"r":1,"modulus":0,"x":[0,"z"],"A":[[1,0],[0,1]]})"), DocumentError);
  CHECK_THROWS_AS(parse_element(R"({"r":2,"modulus":0,"x":[0,0],"A":[[1,0],[0,1]]})"), DocumentError);
  CHECK(parse_element(R"({"r":1,"modulus":0,"x":["-7","12345678901234567890123"],"A":[[1,0],[0,1]]})").x()[1] ==
        Integer("12345678901234567890123"));
}

TEST_CASE("command exit codes") {
  CHECK(cmd_orbits(3, Format::Json).exit_code == kOk);
  CHECK(cmd_orbits(0, Format::Json).exit_code == kInputError);
  CHECK(cmd_orbits(9, Format::Json).exit_code == kInputError);
  CHECK(cmd_split(3, 1, std::nullopt, Format::Json).exit_code == kOk);
  CHECK(cmd_split(5, 1, std::nullopt, Format::Json).exit_code == kInputError);
  CHECK(cmd_split(3, 1, 6, Format::Json).exit_code == kInputError);
  CHECK(cmd_verify(1, 20, 0, false, Format::Json).exit_code == kOk);
  CHECK(cmd_verify(1, 20, 0, true, Format::Json).exit_code == kPropertyFailure);
  CHECK(cmd_verify(7, 20, 0, false, Format::Json).exit_code == kInputError);
  CHECK(cmd_verify(1, 0, 0, false, Format::Json).exit_code == kInputError);
  CHECK(cmd_coeff(4, Format::Json).exit_code == kOk);
  CHECK(cmd_coeff(0, Format::Json).exit_code == kInputError);
}

TEST_CASE("report contents") {
  const auto split = nlohmann::json::parse(cmd_split(7, 2, std::nullopt, Format::Json).output);
  CHECK(split["command"] == "split");
  CHECK(split["version"] == kVersion);
  CHECK(split["results"]["homotopy"]["modulus"] == 240);
  CHECK(split["results"]["smooth"]["splits"] == false);
  CHECK(split["results"]["smooth"]["witness"]["kind"] == "certificate");
  CHECK(split["results"]["splits_iff_r_is_1"] == true);

  const auto one = nlohmann::json::parse(cmd_split(3, 1, std::nullopt, Format::Json).output);
  CHECK(one["results"]["homotopy"]["witness"]["kind"] == "section");

  const auto coeff = nlohmann::json::parse(cmd_coeff(4, Format::Json).output);
  REQUIRE(coeff["results"]["rows"].size() == 4);
  CHECK(coeff["results"]["rows"][2]["coefficient"] == 240);

  const auto orbits = nlohmann::json::parse(cmd_orbits(2, Format::Json).output);
  CHECK(orbits["results"]["orbits"][0]["size"] == 10);
  CHECK(orbits["results"]["orbits"][1]["size"] == 6);
  CHECK(orbits["results"]["total"] == 16);
}

TEST_CASE("output is deterministic") {
  CHECK(cmd_verify(2, 50, 7, false, Format::Json).output == cmd_verify(2, 50, 7, false, Format::Json).output);
  CHECK(cmd_orbits(4, Format::Table).output == cmd_orbits(4, Format::Table).output);
}

TEST_CASE("mul and inv") {
  const JacobiElement g(covec({0, 1}, 24), transvection(vec({1, 0})));
  const auto gs = emit_element(g);
  const auto prod = cmd_mul(gs, gs, std::string("00"));
  REQUIRE(prod.exit_code == kOk);
  CHECK(parse_element(prod.output) == g * g);
  const auto inv = cmd_inv(gs, std::string("00"));
  REQUIRE(inv.exit_code == kOk);
  CHECK(parse_element(inv.output) * g == JacobiElement::identity(Rank(1), Modulus(24)));
  CHECK(cmd_mul(gs, gs, std::string("11")).exit_code == kPropertyFailure);
  CHECK(cmd_mul(gs, "not json", std::nullopt).exit_code == kInputError);
  CHECK(cmd_mul(gs, emit_element(JacobiElement::identity(Rank(1), Modulus(4))), std::nullopt).exit_code == kInputError);
  CHECK(cmd_inv(gs, std::string("0")).exit_code == kInputError);
}

TEST_CASE("argument parsing") {
  std::string out;
  CHECK(run_args({"coeff", "--jmax", "3"}, &out) == kOk);
  CHECK(nlohmann::json::parse(out)["results"]["rows"].size() == 3);
  CHECK(run_args({"orbits", "--r", "2", "--format", "table"}, &out) == kOk);
  CHECK(out.find("representative") != std::string::npos);
  CHECK(run_args({"orbits"}) == kInputError);
  CHECK(run_args({"nonsense"}) == kInputError);
  CHECK(run_args({"split", "--p", "3", "--r", "x"}) == kInputError);
  CHECK(run_args({"mul", "--lhs", "/nonexistent", "--rhs", "/nonexistent"}) == kInputError);
  CHECK(run_args({"verify", "--r", "1", "--samples", "10", "--seed", "1", "--negative-control"}) == kPropertyFailure);
}

}
