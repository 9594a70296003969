#include <doctest.h>

#include "xnlp/solvers.hpp"

using namespace xnlp;

namespace {

// Runs both modes, checks they agree and that YES answers carry a valid
// certificate. Returns the decision.
bool decide(const Instance& inst) {
  auto ex = solve(inst, SolveMode::Exhaustive);
  auto st = solve(inst, SolveMode::Structured);
  CHECK(ex.decision == st.decision);
  if (ex.decision) CHECK(check_certificate(inst, ex.certificate));
  if (st.decision) CHECK(check_certificate(inst, st.certificate));
  return st.decision;
}

CellularAutomaton identity_ca(int states, int q, int t, Acceptance acc) {
  CellularAutomaton ca;
  ca.num_states = states;
  ca.left = 0;
  ca.right = 1;
  for (int a = 0; a < states; ++a)
    for (int b = 2; b < states; ++b)
      for (int c = 0; c < states; ++c) ca.transitions.push_back({a, b, c, b});
  for (int s = 2; s < states; ++s) ca.accepting.push_back(s);
  ca.initial.assign(q, 2);
  ca.initial.front() = 0;
  ca.initial.back() = 1;
  ca.t = t;
  ca.acceptance = acc;
  return ca;
}

}  // namespace

TEST_CASE("cellular automaton") {
  CHECK(decide(identity_ca(3, 4, 3, Acceptance::AllAccepting)));
  auto halt = identity_ca(3, 3, 1, Acceptance::NonHalting);
  halt.transitions.clear();
  CHECK_FALSE(decide(halt));

  // One interior cell, two branches from state 2: to 3 (dead end) or 4 -> 5.
  CellularAutomaton ca;
  ca.num_states = 6;
  ca.transitions = {{0, 2, 1, 3}, {0, 2, 1, 4}, {0, 4, 1, 5}};
  ca.accepting = {5};
  ca.initial = {0, 2, 1};
  ca.t = 2;
  auto ans = solve(ca, SolveMode::Exhaustive);
  REQUIRE(ans.decision);
  CHECK(ans.certificate == Json::parse("[[0,2,1],[0,4,1],[0,5,1]]"));
  CHECK(decide(ca));
}

TEST_CASE("chained cnf") {
  ChainedCnf c;
  c.r = 2;
  c.q = 2;
  c.k = 1;
  c.junctions = {{{1, 3}}};
  CHECK(decide(c));

  ChainedCnf forced;
  forced.r = 2;
  forced.q = 1;
  forced.k = 1;
  forced.junctions = {{{-1}}};
  CHECK_FALSE(decide(forced));
}

TEST_CASE("chained clique") {
  LayeredGraph single;
  single.graph = make_graph(1, {});
  single.layer = {1};
  single.color = {1};
  CHECK(decide(single));

  LayeredGraph apart;
  apart.graph = make_graph(2, {});
  apart.r = 2;
  apart.layer = {1, 2};
  apart.color = {1, 1};
  CHECK_FALSE(decide(apart));
}

TEST_CASE("nnccm") {
  CHECK(decide(Nnccm{1, 1, {{1, 1, 0, 0}}}));
  CHECK_FALSE(decide(Nnccm{1, 1, {{1, 1, 0, 0}, {1, 1, 1, 1}}}));
  CHECK_FALSE(decide(Nnccm{2, 0, {{1, 2, 0, 0}}}));
}

TEST_CASE("list coloring") {
  ListColoringInstance one{make_graph(1, {}), {{{0}}}, {{1}}, {}};
  CHECK(decide(one));
  ListColoringInstance clash{make_graph(2, {{0, 1}}), {{{0, 1}}}, {{1}, {1}}, {}};
  CHECK_FALSE(decide(clash));
  ListColoringInstance c4{make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                          {{{0, 1, 3}, {1, 2, 3}}},
                          {{1, 2}, {1}, {1, 2}, {1}},
                          {}};
  auto ans = solve(c4, SolveMode::Exhaustive);
  REQUIRE(ans.decision);
  CHECK(ans.certificate == Json::array({2, 1, 2, 1}));
  CHECK(decide(c4));
}

TEST_CASE("pathwidth vertex problems") {
  PathwidthVertexInstance star{make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
                               {{{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
                               VertexProblem::DominatingSet,
                               1};
  CHECK(decide(star));
  auto ans = solve(star, SolveMode::Structured);
  CHECK(ans.certificate == Json::array({0}));
  PathwidthVertexInstance tri{make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), {{{0, 1, 2}}},
                              VertexProblem::IndependentSet, 2};
  CHECK_FALSE(decide(tri));
}

TEST_CASE("scheduling") {
  CHECK(decide(SchedulingInstance{3, {{0, 1}, {1, 2}}, 1, 3}));
  CHECK_FALSE(decide(SchedulingInstance{3, {{0, 1}, {1, 2}}, 3, 2}));
}

TEST_CASE("uniform emulation") {
  CHECK(decide(UniformEmulationInstance{4, 1, {1, 1, 1, 1}}));
  CHECK_FALSE(decide(UniformEmulationInstance{2, 2, {1, 1, 1}}));
  CHECK(decide(UniformEmulationInstance{2, 2, {1, 1, 1, 1}}));
}

TEST_CASE("bandwidth") {
  CHECK(decide(BandwidthInstance{make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 1}));
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.push_back({u, v});
  CHECK_FALSE(decide(BandwidthInstance{make_graph(5, k5), 3}));
  CHECK(decide(BandwidthInstance{make_graph(5, k5), 4}));
}

TEST_CASE("reconfiguration") {
  ReconfigurationInstance same{make_graph(2, {{0, 1}}), SetKind::Clique, MoveRule::TokenSliding, {0}, {0}, 1, 1};
  CHECK(decide(same));
  ReconfigurationInstance slide{make_graph(2, {{0, 1}}), SetKind::Clique, MoveRule::TokenSliding, {0}, {1}, 1, 2};
  CHECK(decide(slide));
  slide.exact = true;
  CHECK(decide(slide));
}

TEST_CASE("fsa intersection") {
  DfaCollection all{2, "", {Dfa{1, 0, {0, 0}, {0}}}, false};
  CHECK(decide(all));
  // Automaton 1 accepts exactly "0", automaton 2 exactly "1".
  Dfa only0{3, 0, {1, 2, 2, 2, 2, 2}, {1}};
  Dfa only1{3, 0, {2, 1, 2, 2, 2, 2}, {1}};
  CHECK_FALSE(decide(DfaCollection{2, "", {only0, only1}, false}));
}

TEST_CASE("lcs") {
  CHECK(decide(LcsInstance{{"abc", "abc"}, 3}));
  CHECK_FALSE(decide(LcsInstance{{"ab", "ba"}, 2}));
  CHECK(decide(LcsInstance{{"abcd", "acbd"}, 3}));
}
