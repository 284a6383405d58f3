#include <doctest.h>

#include "oracles.hpp"
#include "otg/error.hpp"
#include "otg/io.hpp"

using namespace otg;
using io::json;

TEST_CASE("tuples and patterns serialise as documented") {
  CHECK(io::to_json(IncreasingTuple{1, 4, 9}).dump() == "[1,4,9]");
  CHECK(io::to_json(otp({0, 1}, {1, 2})) == json::parse(R"({"n":2,"ra":[0,1],"rb":[1,2]})"));
  CHECK(io::pattern_from_json(io::to_json(otp({1, 5}, {0, 9}))) == otp({1, 5}, {0, 9}));
  CHECK_THROWS_AS(io::tuple_from_json(json::parse("[3,1]")), Error);
  CHECK_THROWS_AS(io::tuple_from_json(json::parse("[-1]")), Error);
}

TEST_CASE("graphs round-trip through JSON") {
  for (Value n = 3; n <= 7; ++n)
    for (std::size_t r = 1; r < n; ++r) {
      const Graph g = shift_graph(r, n);
      const auto back = io::graph_from_json(io::parse(io::dump(io::to_json(g))));
      CHECK(std::get<Graph>(back) == g);
      const Digraph d = lshift_digraph(r, n);
      CHECK(std::get<Digraph>(io::graph_from_json(io::to_json(d))) == d);
    }
  SplitMix64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + rng.below(12), 40);
    CHECK(std::get<Graph>(io::graph_from_json(io::to_json(g))) == g);
  }
}

TEST_CASE("graph JSON layout") {
  const json j = io::to_json(shift_graph(2, 3));
  CHECK(j.at("vertices") == json::parse("[[0,1],[0,2],[1,2]]"));
  CHECK(j.at("edges") == json::parse("[[0,2]]"));
  CHECK(j.at("directed") == false);
}

TEST_CASE("DOT output") {
  const std::string g = io::to_dot(shift_graph(2, 4));
  CHECK(g.rfind("graph G {", 0) == 0);
  CHECK(g.find("label=\"(0,1)\"") != std::string::npos);
  CHECK(std::count(g.begin(), g.end(), '-') == 2 * 4);
  const std::string d = io::to_dot(lshift_digraph(2, 3));
  CHECK(d.rfind("digraph G {", 0) == 0);
  CHECK(d.find("0 -> 2;") != std::string::npos);
}

TEST_CASE("parse errors are reported as such") {
  try {
    io::parse("{not json");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
  }
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"edges":[]})")), Error);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"vertices":[[0]],"edges":[[0,1,2]]})")), Error);
}

TEST_CASE("artifact verification accepts genuine artifacts") {
  const Graph g = shift_graph(2, 6);
  CHECK(io::verify_artifact(io::to_json(g), std::nullopt).ok);
  const auto chi = chromatic_number(g);
  CHECK(io::verify_artifact(io::chi_report(chi), g).ok);
  CHECK(io::verify_artifact(io::to_json(chi.witness), g).ok);

  const IncreasingTuple a{0, 2, 3}, b{1, 3, 6};
  const auto d = decompose(a, b);
  CHECK(io::verify_artifact(io::decomposition_report(a, b, d), std::nullopt).ok);
  const auto e = cover_embedding(a, b, d.cover, 5);
  CHECK(io::verify_artifact(io::embedding_report(a, b, e, d.cover, true), std::nullopt).ok);
}

TEST_CASE("artifact verification rejects tampered artifacts") {
  const Graph g = shift_graph(2, 6);
  auto chi = io::chi_report(chromatic_number(g));
  chi["chi"] = 2;
  CHECK_FALSE(io::verify_artifact(chi, g).ok);
  json colouring = io::to_json(chromatic_number(g).witness);
  colouring["colors"][0] = colouring["colors"][3];
  colouring["colors"][3] = 7;
  CHECK_FALSE(io::verify_artifact(colouring, g).ok);

  const IncreasingTuple a{0, 1}, b{1, 2};
  const auto d = decompose(a, b);
  json rep = io::decomposition_report(a, b, d);
  rep["cover"]["k"] = 3;
  CHECK_FALSE(io::verify_artifact(rep, std::nullopt).ok);

  const auto e = cover_embedding(a, b, d.cover, 5);
  json emb = io::embedding_report(a, b, e, d.cover, true);
  auto& codes = emb["images"][0]["codes"];
  codes[1] = codes[1].get<Value>() + 1;
  CHECK_FALSE(io::verify_artifact(emb, std::nullopt).ok);

  CHECK_THROWS_AS(io::verify_artifact(json::parse(R"({"kind":"nothing"})"), std::nullopt), Error);
  CHECK_THROWS_AS(io::verify_artifact(io::to_json(chromatic_number(g).witness), std::nullopt), Error);
}

TEST_CASE("inconclusive chi report carries bounds") {
  const Graph g = shift_graph(2, 12);
  SolverOptions o;
  o.budget = 1;
  const auto r = chromatic_number(g, o);
  REQUIRE_FALSE(r.exact);
  const json j = io::chi_report(r);
  CHECK(j.at("inconclusive") == true);
  CHECK(j.at("lower").get<std::uint32_t>() <= j.at("upper").get<std::uint32_t>());
  CHECK_FALSE(j.contains("chi"));
}
