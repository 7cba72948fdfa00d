#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "spcoh/cli.hpp"
#include "spcoh/errors.hpp"
#include "spcoh/text.hpp"

using namespace spcoh;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("symbols round trip through JSON") {
  for (int theta = 1; theta <= 4; ++theta) {
    const auto r = call({"symbols", "--rank", std::to_string(theta), "--format", "json"});
    REQUIRE(r.status == 0);
    const auto doc = Json::parse(r.out);
    std::vector<Symbol> parsed;
    for (const auto& entry : doc.at("symbols")) {
      parsed.push_back(symbol_from_json(entry.at("symbol")));
      CHECK(parse_symbol(entry.at("text").get<std::string>()) == parsed.back());
    }
    CHECK(parsed == enumerate_symbols(theta));
  }
}

TEST_CASE("rank two table") {
  const auto r = call({"symbols", "--rank", "2", "--format", "tsv"});
  CHECK(r.status == 0);
  CHECK(r.out.find("0,1,2;\t3\t(1,(),())") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("cohomology JSON") {
  const auto r = call({"cohomology", "--theta", "2", "--format", "json"});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  REQUIRE(doc.at("cohomology").size() == 3);
  CHECK(doc["cohomology"][0]["degree"] == 0);
  CHECK(doc["cohomology"][1]["terms"].size() == 3);
  CHECK(doc["cohomology"][2]["terms"].size() == 1);
  bool cuspidal = false;
  for (const auto& t : doc["cohomology"][1]["terms"])
    if (t["text"] == "0,1,2;") cuspidal = t["eigenvalue"]["sign"] == -1 && t["eigenvalue"]["exp"] == 1;
  CHECK(cuspidal);
}

TEST_CASE("other verbs") {
  CHECK(call({"degree", "--symbol", "0,1,2;", "--q", "3"}).status == 0);
  const auto deg = Json::parse(call({"degree", "--symbol", "1,2;0", "--q", "3", "--format", "json"}).out);
  CHECK(deg["value"] == "15");
  const auto ind = Json::parse(call({"induce", "--symbol", "0,1;1", "--a", "1", "--format", "json"}).out);
  CHECK(ind["result"].size() == 3);
  CHECK(call({"restrict", "--symbol", "0,2;1", "--a", "1"}).status == 0);
  CHECK(call({"coxeter", "--theta", "3", "--format", "tsv"}).status == 0);
  const auto e1 = call({"e1", "--theta", "2", "--format", "tsv"});
  CHECK(e1.status == 0);
  CHECK(e1.out.find("B0=[0,1,2;]") != std::string::npos);
  const auto zeta = Json::parse(call({"zeta", "--theta", "2", "--n", "2", "--q", "3", "--format", "json"}).out);
  CHECK(zeta["total_value"] == "280");
  const auto oracle = Json::parse(call({"oracle", "--theta", "2", "--p", "3", "--n", "2", "--format", "json"}).out);
  CHECK(oracle["total"] == 280);
  CHECK(oracle["per_stratum"]["1"] == 240);
  CHECK(call({"verify", "--suite", "ladder", "--theta-max", "4"}).status == 0);
}

TEST_CASE("exit codes") {
  CHECK(call({"--help"}).status == 0);
  CHECK(call({"--help"}).out.find("Exit status") != std::string::npos);
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"symbols"}).status == 2);
  CHECK(call({"symbols", "--rank", "-1"}).status == 2);
  CHECK(call({"symbols", "--rank", "2", "--format", "xml"}).status == 2);
  CHECK(call({"degree", "--symbol", "abc"}).status == 2);
  CHECK(call({"degree", "--symbol", "0,2;0,2"}).status == 3);
  CHECK(call({"restrict", "--symbol", "2;", "--a", "3"}).status == 3);
  CHECK(call({"oracle", "--theta", "4", "--p", "2", "--n", "1"}).status == 4);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1", "--max-work", "5"}).status == 4);
  CHECK(call({"verify", "--suite", "nonsense"}).status == 2);
  const auto bad = call({"degree", "--symbol", "0,2;0,2", "--format", "json"});
  CHECK(Json::parse(bad.err)["error"]["kind"] == "InvalidSymbol");
}

TEST_CASE("work cap from the environment") {
  ::setenv(cli::kMaxWorkEnv, "5", 1);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1"}).status == 4);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1", "--max-work", "1e6"}).status == 0);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1", "--no-scale-guard"}).status == 0);
  ::setenv(cli::kMaxWorkEnv, "lots", 1);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1"}).status == 2);
  ::unsetenv(cli::kMaxWorkEnv);
  CHECK(call({"oracle", "--theta", "2", "--p", "2", "--n", "1"}).status == 0);
}

TEST_CASE("text helpers") {
  CHECK(parse_partition("(3,1)") == Partition{3, 1});
  CHECK(parse_partition(" ( ) ") == Partition{});
  CHECK_THROWS_AS(parse_partition("(1,3)"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("(2,a)"), ParseError);
  CHECK_THROWS_AS(symbol_from_json(Json{{"top", 1}}), ParseError);
  const auto s = Symbol::normalize({0, 1, 2}, {});
  CHECK(symbol_from_json(to_json(s)) == s);
  CHECK(join_symbols(RepMultiset{s, trivial_symbol(2)}) == "0,1,2; 2;");
  RepMultiset twice;
  twice.add(s, 2);
  CHECK(to_json(twice).size() == 2);
}
