#include <doctest.h>

#include <algorithm>

#include "xnlp/harness.hpp"
#include "xnlp/solvers.hpp"

using namespace xnlp;

namespace {

bool decide(const Instance& inst, std::uint64_t budget = kDefaultBudget) {
  auto v = oracle(inst, budget);
  REQUIRE(v.decided);
  return v.decision;
}

// Source and target decided, and equal; returns the shared decision.
bool preserved(const std::string& id, const Instance& source, int mutant = 0) {
  auto out = apply_reduction(id, source, mutant);
  CHECK(validate(out.target).empty());
  bool a = decide(source), b = decide(out.target);
  CHECK(a == b);
  return a;
}

ChainedCnf partitioned(int r, std::vector<std::vector<int>> groups, Cnf junction, bool positive = true) {
  ChainedCnf c;
  c.r = r;
  c.partition = std::move(groups);
  c.k = static_cast<int>(c.partition.size());
  for (const auto& g : c.partition) c.q += static_cast<int>(g.size());
  c.junctions.assign(r - 1, junction);
  c.regular = true;
  c.positive = positive;
  return c;
}

LayeredGraph layered(int r, int k, std::vector<int> layer, std::vector<int> color,
                     std::vector<std::pair<int, int>> edges) {
  LayeredGraph g;
  g.r = r;
  g.k = k;
  g.layer = std::move(layer);
  g.color = std::move(color);
  g.graph = make_graph(static_cast<int>(g.layer.size()), std::move(edges));
  return g;
}

CellularAutomaton identity_ca(int states, int q, int t, Acceptance acc) {
  CellularAutomaton ca;
  ca.num_states = states;
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

TEST_CASE("registry") {
  CHECK(reduction_catalog().size() == 21);
  for (const auto& info : reduction_catalog()) {
    CHECK_FALSE(info.mutants.empty());
    CHECK(reduction_info(info.id).id == info.id);
  }
  CHECK(reduction_info("cmc_to_nnccm").id == "cmc-to-nnccm");
  CHECK_THROWS_AS(reduction_info("no-such-reduction"), UsageError);
  CHECK_THROWS_AS(apply_reduction("lcs-to-acyclic-fsa", LcsInstance{{"ab"}, 1}, 3), UsageError);
  CHECK_THROWS_AS(apply_reduction("lcs-to-acyclic-fsa", Nnccm{}), ValidationError);
}

TEST_CASE("cellular automaton reductions") {
  auto src = identity_ca(3, 3, 2, Acceptance::AllAccepting);
  auto out = apply_reduction("ca-annotate-time", src);
  const auto& ca = std::get<CellularAutomaton>(out.target);
  CHECK(ca.num_states == 2 + 1 * 3 + 1);
  CHECK(ca.t == 3);
  CHECK(ca.acceptance == Acceptance::NonHalting);
  CHECK(preserved("ca-annotate-time", src));
  src.transitions.clear();
  CHECK_FALSE(preserved("ca-annotate-time", src));

  CellularAutomaton one;
  one.num_states = 4;
  one.initial = {0, 2, 1};
  one.transitions = {{0, 2, 1, 3}, {0, 3, 1, 2}};
  one.accepting = {2};
  one.t = 2;
  auto sat = apply_reduction("ca-to-chained-sat", one);
  CHECK(std::get<ChainedCnf>(sat.target).q == 3 * 4 + 1 * 2);
  CHECK(sat.constants["block_size"] == 14);
  CHECK(std::get<ChainedCnf>(sat.target).k == 4);
  CHECK(preserved("ca-to-chained-sat", one));
  one.accepting = {};
  CHECK_FALSE(preserved("ca-to-chained-sat", one));
}

TEST_CASE("positivization") {
  auto c = partitioned(1, {{0, 1, 2}, {3}}, {}, false);
  c.first = {{-1, 4}};
  auto out = std::get<ChainedCnf>(apply_reduction("cnf-positivize", c).target);
  CHECK(out.first == Cnf{{2, 3, 4}});
  CHECK(out.positive);

  auto pos = partitioned(2, {{0, 1}}, {{1, 4}});
  auto same = std::get<ChainedCnf>(apply_reduction("cnf-positivize", pos).target);
  CHECK(same.junctions == pos.junctions);

  ChainedCnf bare = c;
  bare.partition.clear();
  CHECK_THROWS_WITH_AS(apply_reduction("cnf-positivize", bare), "positivization requires exactly-one groups",
                       ValidationError);
}

TEST_CASE("regularization folds boundary formulas") {
  auto c = partitioned(3, {{0, 1}}, {{1, 3}}, false);
  c.first = {{1}};
  auto out = apply_reduction("cnf-regularize-ii", c);
  const auto& t = std::get<ChainedCnf>(out.target);
  CHECK(t.q == 2 + 3);
  CHECK(t.k == c.k + 1);
  CHECK(t.first.empty());
  CHECK(t.last.empty());
  CHECK(preserved("cnf-regularize-ii", c));
  c.last = {{-2}, {-1}};  // unsatisfiable on its own
  CHECK_FALSE(preserved("cnf-regularize-ii", c));
}

TEST_CASE("chained SAT to list coloring") {
  auto yes = partitioned(3, {{0, 1}, {2}}, {{1, 4}});
  auto out = apply_reduction("chained-sat-to-list-coloring", yes);
  CHECK(pd_width(std::get<ListColoringInstance>(out.target).pd) <= 2 * yes.k + 1);
  CHECK(preserved("chained-sat-to-list-coloring", yes));
  auto no = partitioned(2, {{0, 1}}, {{1}, {2}});
  CHECK_FALSE(preserved("chained-sat-to-list-coloring", no));
  auto neg = partitioned(2, {{0, 1}}, {{-1}}, false);
  CHECK_THROWS_AS(apply_reduction("chained-sat-to-list-coloring", neg), ValidationError);
}

TEST_CASE("list coloring reductions") {
  ListColoringInstance l;
  l.graph = make_graph(2, {{0, 1}});
  l.pd.bags = {{0, 1}};
  l.lists = {{1}, {1, 2}};
  auto pre = apply_reduction("list-coloring-to-precoloring", l);
  CHECK(pre.constants["pendants"] == 1);
  const auto& p = std::get<ListColoringInstance>(pre.target);
  CHECK(p.graph.n == 3);
  CHECK(p.precolored[2] == 2);
  CHECK(preserved("list-coloring-to-precoloring", l));
  CHECK(preserved("list-coloring-to-cmc", l));

  l.lists = {{1}, {1}};
  CHECK_FALSE(preserved("list-coloring-to-precoloring", l));
  CHECK_FALSE(preserved("list-coloring-to-cmc", l));

  ListColoringInstance ragged;
  ragged.graph = make_graph(3, {{0, 1}, {1, 2}});
  ragged.pd.bags = {{0, 1}, {1}, {1, 2}};
  ragged.lists = {{1}, {1, 2}, {2}};
  auto cmc = apply_reduction("list-coloring-to-cmc", ragged);
  CHECK(cmc.constants["padding"] == 1);
  CHECK(std::get<LayeredGraph>(cmc.target).k == 2);
  CHECK_FALSE(preserved("list-coloring-to-cmc", ragged));
}

TEST_CASE("partial complement") {
  auto g = layered(3, 2, {1, 1, 2, 2, 3}, {1, 2, 1, 2, 1}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  auto once = std::get<LayeredGraph>(apply_reduction("partial-complement", g).target);
  CHECK(once.variant == ChainedVariant::IndependentSet);
  auto twice = std::get<LayeredGraph>(apply_reduction("partial-complement", LayeredGraph{once.graph, 3, 2, once.layer, once.color}).target);
  CHECK(twice.graph.edges == g.graph.edges);

  auto edgeless = layered(2, 1, {1, 2}, {1, 1}, {});
  CHECK_FALSE(preserved("partial-complement", edgeless));
  auto edge = layered(2, 1, {1, 2}, {1, 1}, {{0, 1}});
  CHECK(preserved("partial-complement", edge));
}

TEST_CASE("chained clique to counter machine") {
  // k = 1, r = 2, two vertices per class, every cross pair adjacent.
  auto full = layered(2, 1, {1, 1, 2, 2}, {1, 1, 1, 1}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto out = apply_reduction("cmc-to-nnccm", full);
  const auto& m = std::get<Nnccm>(out.target);
  CHECK(m.k == 4);
  CHECK(m.n == 2 * 2);
  CHECK(check_parameter_bound("cmc-to-nnccm", full, default_g_table()));
  CHECK(preserved("cmc-to-nnccm", full));
  auto none = layered(2, 1, {1, 1, 2, 2}, {1, 1, 1, 1}, {});
  CHECK_FALSE(preserved("cmc-to-nnccm", none));

  auto two = layered(1, 2, {1, 1}, {1, 2}, {{0, 1}});
  auto out2 = apply_reduction("cmc-to-nnccm", two);
  CHECK(out2.parameter == 8);
  CHECK(check_parameter_bound("cmc-to-nnccm", two, default_g_table()));
}

TEST_CASE("counter machine to scheduling") {
  Nnccm pass{1, 1, {{1, 1, 0, 0}}};
  auto out = apply_reduction("nnccm-to-scheduling", pass);
  const auto& s = std::get<SchedulingInstance>(out.target);
  CHECK(s.machines == 3);
  CHECK(out.constants["c"] == 4);
  CHECK(s.deadline == 6);
  CHECK(poset_width(s.num_tasks, s.prec) <= 3 * (1 + 1));
  CHECK(check_parameter_bound("nnccm-to-scheduling", pass, default_g_table()));
  CHECK(preserved("nnccm-to-scheduling", pass));
  Nnccm reject{1, 1, {{1, 1, 0, 0}, {1, 1, 1, 1}}};
  CHECK_FALSE(preserved("nnccm-to-scheduling", reject));
}

TEST_CASE("counter machine to uniform emulation") {
  auto e = emulation_constants(1, 1, 1);
  CHECK(e.d1 == 5);
  CHECK(e.d2 == 6);
  CHECK(e.d3 == 7);
  CHECK(e.c == 15);
  CHECK(e.n0 == 4);
  CHECK(e.M == 9);

  // Fewer than three counters are padded with unchecked ones.
  Nnccm pass{1, 1, {{1, 1, 0, 0}}};
  auto out = apply_reduction("nnccm-to-uniform-emulation", pass);
  const auto& u = std::get<UniformEmulationInstance>(out.target);
  auto e3 = emulation_constants(3, 1, 1);
  CHECK(out.constants["d1"] == e3.d1);
  CHECK(u.c == e3.c);
  CHECK(u.m == e3.M);
  long long total = 0;
  for (int w : u.weights) total += w;
  CHECK(total == static_cast<long long>(u.m) * u.c);
  CHECK(preserved("nnccm-to-uniform-emulation", pass));

  Nnccm stuck{1, 1, {{1, 1, 0, 0}, {1, 1, 1, 1}}};
  CHECK_FALSE(preserved("nnccm-to-uniform-emulation", stuck));
}

TEST_CASE("logarithmic pathwidth constructions") {
  auto yes = partitioned(2, {{0, 1}}, {{1, 4}}, false);
  auto dom = apply_reduction("chained-sat-to-log-pw-domset", yes);
  const auto& d = std::get<PathwidthVertexInstance>(dom.target);
  // r*k*t triangles plus one gadget of 2k(2^t+2)+1 vertices per clause.
  CHECK(d.graph.n == 2 * 1 * 1 * 3 + (2 * 1 * (2 + 2) + 1));
  CHECK(d.K == 2 * 1 * 1 + 2 * 1 * 1 * 1);
  CHECK(pd_width(d.pd) <= 6 * 1 * 1 + 4 + 2);
  CHECK(preserved("chained-sat-to-log-pw-domset", yes));

  auto ind = apply_reduction("chained-sat-to-log-pw-indset", yes);
  const auto& i = std::get<PathwidthVertexInstance>(ind.target);
  // Clause {x1, x2'} is satisfied by two padded variables: gadget of 3*2+2.
  CHECK(i.graph.n == 2 * 1 * 1 * 2 + (3 * 2 + 2));
  CHECK(i.K == 2 + (2 + 2));
  CHECK(pd_width(i.pd) <= 4 * 1 * 1 + 6);
  CHECK(preserved("chained-sat-to-log-pw-indset", yes));

  auto no = partitioned(2, {{0, 1}}, {{1}, {2}}, false);
  CHECK_FALSE(preserved("chained-sat-to-log-pw-domset", no));
  CHECK_FALSE(preserved("chained-sat-to-log-pw-indset", no));
}

TEST_CASE("clique to weighted CNF") {
  PathwidthVertexInstance tri;
  tri.graph = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  tri.pd.bags = {{0, 1, 2}};
  tri.problem = VertexProblem::Clique;
  tri.K = 3;
  auto out = apply_reduction("log-pw-clique-to-weighted-cnf", tri);
  CHECK(out.parameter == 2 * out.constants["groups"].get<int>() + 2);
  CHECK(preserved("log-pw-clique-to-weighted-cnf", tri));

  PathwidthVertexInstance empty = tri;
  empty.graph = make_graph(3, {});
  empty.K = 2;
  CHECK_FALSE(preserved("log-pw-clique-to-weighted-cnf", empty));
}

TEST_CASE("dominating set reconfiguration") {
  auto yes = partitioned(2, {{0}}, {{1, 2}});
  auto ts = apply_reduction("chained-sat-to-ts-ds-reconfig", yes);
  const auto& r = std::get<ReconfigurationInstance>(ts.target);
  CHECK(r.tokens == 2 * 1 + 2);
  CHECK(r.T == 1 * (2 + 2) + 2 * 2 - 1);
  CHECK(ts.constants["T_short"] == 3);
  CHECK(preserved("chained-sat-to-ts-ds-reconfig", yes));
  auto tj = apply_reduction("ts-to-tj-timer", r);
  const auto& j = std::get<ReconfigurationInstance>(tj.target);
  CHECK(j.tokens == r.tokens + 1);
  CHECK(j.T - r.T == 2 * 2 - 2);
  CHECK(j.rule == MoveRule::TokenJumping);
  CHECK(preserved("ts-to-tj-timer", r));

  auto no = partitioned(2, {{0, 1}}, {{1}, {2}});
  auto ts_no = apply_reduction("chained-sat-to-ts-ds-reconfig", no).target;
  CHECK_FALSE(preserved("chained-sat-to-ts-ds-reconfig", no));
  CHECK_FALSE(preserved("ts-to-tj-timer", ts_no));

  ReconfigurationInstance foreign;
  foreign.graph = make_graph(2, {{0, 1}});
  foreign.rule = MoveRule::TokenSliding;
  foreign.start = foreign.target = {0};
  foreign.tokens = 1;
  CHECK_THROWS_AS(apply_reduction("ts-to-tj-timer", foreign), ValidationError);
}

TEST_CASE("clique reconfiguration") {
  auto yes = layered(2, 1, {1, 2}, {1, 1}, {{0, 1}});
  auto no = layered(2, 1, {1, 2}, {1, 1}, {});
  for (const char* id : {"cmc-to-tj-clique-reconfig", "cmc-to-ts-clique-reconfig"}) {
    auto out = apply_reduction(id, yes);
    const auto& r = std::get<ReconfigurationInstance>(out.target);
    CHECK(r.tokens == 2);
    CHECK(out.constants["moves"] == 1 * (2 + 2));
    CHECK(r.T == 5);
    CHECK(preserved(id, yes));
    CHECK_FALSE(preserved(id, no));
  }
  auto tj = std::get<ReconfigurationInstance>(apply_reduction("cmc-to-tj-clique-reconfig", yes).target);
  auto comp = std::get<ReconfigurationInstance>(apply_reduction("reconfig-complement", tj).target);
  CHECK(comp.kind == SetKind::IndependentSet);
  CHECK(complement(comp.graph).edges == tj.graph.edges);
  CHECK(preserved("reconfig-complement", tj));
  CHECK_FALSE(preserved("reconfig-complement", apply_reduction("cmc-to-tj-clique-reconfig", no).target));

  // Sliding variant: sentinels of level -1 are ids 2 (color 1) and 3 (color 2).
  auto two = layered(1, 2, {1, 1}, {1, 2}, {{0, 1}});
  auto ts = std::get<ReconfigurationInstance>(apply_reduction("cmc-to-ts-clique-reconfig", two).target);
  auto mat = adjacency_matrix(ts.graph);
  CHECK(mat[3][0]);
  CHECK_FALSE(mat[2][1]);
  CHECK(preserved("cmc-to-ts-clique-reconfig", two));
}

TEST_CASE("longest common subsequence to automata") {
  LcsInstance same{{"ab", "ab"}, 2};
  auto out = apply_reduction("lcs-to-acyclic-fsa", same);
  const auto& d = std::get<DfaCollection>(out.target);
  CHECK(d.automata.size() == 3);
  CHECK(d.automata.front().states == 3);
  CHECK(d.acyclic);
  CHECK(preserved("lcs-to-acyclic-fsa", same));
  CHECK_FALSE(preserved("lcs-to-acyclic-fsa", LcsInstance{{"ab", "ba"}, 2}));

  DfaCollection three;
  three.alphabet = 3;
  Dfa a;
  a.states = 2;
  a.delta = {1, 0, 0, 1, 1, 1};
  a.accepting = {1};
  three.automata = {a};
  auto bin = apply_reduction("fsa-binarize", three);
  CHECK(bin.constants["padded_alphabet"] == 4);
  CHECK(bin.constants["width"] == 2);
  CHECK(std::get<DfaCollection>(bin.target).alphabet == 2);
  CHECK(preserved("fsa-binarize", three));
  three.automata[0].accepting.clear();
  CHECK_FALSE(preserved("fsa-binarize", three));
}
