#include <doctest.h>

#include "xnlp/json_io.hpp"
#include "xnlp/solvers.hpp"

using namespace xnlp;

TEST_CASE("graph validation reports self-loops") {
  Graph g{2, {{0, 0}}, {}};
  auto d = validate_graph(g);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == "self-loop at 0");
}

TEST_CASE("path decomposition of P3") {
  Graph g = make_graph(3, {{0, 1}, {1, 2}});
  PathDecomposition pd{{{0, 1}, {1, 2}}};
  CHECK(validate_pd(g, pd).empty());
  CHECK(pd_width(pd) == 1);
}

TEST_CASE("interval property") {
  Graph g{2, {}, {}};
  PathDecomposition pd{{{0}, {1}, {0}}};
  auto d = validate_pd(g, pd);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == "interval property violated for vertex 0");
}

TEST_CASE("pd width formula") {
  CHECK(pd_width({{{0, 1, 2, 3, 4}}}) == 4);
  CHECK(pd_width({{{0, 1, 2}, {2, 3, 4, 5, 6, 7, 8}, {8, 9}}}) == 6);
}

TEST_CASE("poset width") {
  CHECK(poset_width(3, {{0, 1}, {1, 2}}) == 1);
  CHECK(poset_width(4, {}) == 4);
  CHECK(poset_width(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}) == 2);
  CHECK(poset_width_matching(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}) == 2);
  CHECK_THROWS_WITH_AS(poset_width(2, {{0, 1}, {1, 0}}), "not a partial order", ValidationError);
}

TEST_CASE("certificate examples") {
  BandwidthInstance bw{make_graph(3, {{0, 1}, {1, 2}}), 1};
  CHECK(check_certificate(bw, Json::array({1, 2, 3})));

  PathwidthVertexInstance star{make_graph(4, {{0, 1}, {0, 2}, {0, 3}}), {{{0, 1}, {0, 2}, {0, 3}}},
                               VertexProblem::DominatingSet, 1};
  CHECK(check_certificate(star, Json::array({0})));

  UniformEmulationInstance ue{2, 2, {1, 1, 1, 1}};
  CHECK(check_certificate(ue, Json::array({1, 2, 2, 1})));

  LayeredGraph lg;
  lg.graph = make_graph(2, {});
  lg.r = 2;
  lg.k = 1;
  lg.layer = {1, 2};
  lg.color = {1, 1};
  CHECK_FALSE(check_certificate(lg, Json::array({0, 1})));
}

TEST_CASE("certificate shape mismatch is an error") {
  BandwidthInstance bw{make_graph(3, {{0, 1}, {1, 2}}), 1};
  CHECK_THROWS_AS(check_certificate(bw, Json("abc")), ValidationError);
}

TEST_CASE("parse bandwidth instance") {
  auto inst = parse_instance(R"({"kind":"bandwidth","parameter":1,"n":3,"edges":[[0,1],[1,2]]})");
  auto& bw = std::get<BandwidthInstance>(inst);
  CHECK(bw.k == 1);
  CHECK(bw.graph.n == 3);
  CHECK(bw.graph.edges.size() == 2);
  CHECK(dump(to_json(inst)) == R"({"kind":"bandwidth","parameter":1,"n":3,"edges":[[0,1],[1,2]]})");
}

TEST_CASE("parse rejects self-loops") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"kind":"bandwidth","parameter":1,"n":3,"edges":[[0,0]]})"),
                       doctest::Contains("self-loop"), ValidationError);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_instance("{"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"nope"})"), ValidationError);
}
