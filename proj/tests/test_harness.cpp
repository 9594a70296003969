#include <doctest.h>

#include <set>

#include "xnlp/harness.hpp"
#include "xnlp/solvers.hpp"

using namespace xnlp;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_instances("bandwidth", {{"n", 3}, {"k", 1}}).size() == 8);
  CHECK(enumerate_instances("nnccm", {{"k", 1}, {"n", 1}, {"r", 1}}).size() == 5);

  // Independent recount: non-empty clauses of at most two literals over four
  // variables with distinct variables, then at most one clause per junction.
  long long clauses = 0;
  for (int mask = 1; mask < 16; ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits <= 2) clauses += 1LL << bits;
  }
  CHECK(clauses == 32);
  auto cnf = enumerate_instances("chained-cnf", {{"r", 2}, {"q", 2}, {"k", 1}, {"clauses", 1}, {"literals", 2}});
  CHECK(static_cast<long long>(cnf.size()) == 1 + clauses);

  std::set<std::string> seen;
  for (const auto& inst : cnf) {
    CHECK(validate(inst).empty());
    seen.insert(to_json(inst).dump());
  }
  CHECK(seen.size() == cnf.size());
  CHECK(enumerate_instances("lcs", {{"strings", 2}, {"length", 1}, {"alphabet", "ab"}}).size() == 9);
  CHECK_THROWS_AS(enumerate_instances("bandwidth", {{"n", 8}}, 1000), ResourceError);
  CHECK_THROWS_AS(enumerate_instances("scheduling", Json::object()), UsageError);
}

TEST_CASE("random instances") {
  for (const char* kind : {"cellular-automaton", "chained-cnf", "chained-clique", "chained-independent-set", "nnccm",
                           "list-coloring", "pathwidth-vertex", "scheduling", "uniform-emulation", "bandwidth",
                           "reconfiguration", "fsa-intersection", "lcs"}) {
    CAPTURE(kind);
    CHECK(to_json(random_instance(kind, 7)) == to_json(random_instance(kind, 7)));
    std::set<std::string> distinct;
    for (int seed = 0; seed < 100; ++seed) {
      auto inst = random_instance(kind, seed);
      CHECK(validate(inst).empty());
      distinct.insert(to_json(inst).dump());
    }
    CHECK(distinct.size() >= 2);
  }
  auto g = random_instance("chained-clique", 1, {{"r_min", 3}, {"r_max", 3}, {"k_min", 2}, {"k_max", 2}, {"density", 0.5}});
  CHECK(std::get<LayeredGraph>(g).r == 3);
  CHECK(validate(g).empty());
}

TEST_CASE("verification reports") {
  auto empty = verify_reduction("cnf-positivize", {});
  CHECK(empty.tried == 0);
  CHECK(empty.sound());
  CHECK_FALSE(empty.counterexample);

  std::vector<Instance> stream;
  for (auto partition : {Json{{0, 1}}, Json{{0}, {1}}}) {
    auto part = enumerate_instances("chained-cnf", {{"r", 2}, {"q", 2}, {"k", partition.size()}, {"clauses", 1},
                                                    {"literals", 2}, {"partition", partition}});
    stream.insert(stream.end(), part.begin(), part.end());
  }
  auto shipped = verify_reduction("cnf-positivize", stream);
  CHECK(shipped.tried == static_cast<long long>(stream.size()));
  CHECK(shipped.agreements + shipped.disagreements == shipped.tried);
  CHECK(shipped.disagreements == 0);
  CHECK(shipped.sound());

  auto mutant = verify_reduction("cnf-positivize", stream, kDefaultBudget, 1);
  CHECK(mutant.disagreements > 0);
  REQUIRE(mutant.counterexample);
  CHECK(mutant.counterexample->contains("source"));

  auto j = report_to_json(shipped, false);
  CHECK(j["reduction"] == "cnf-positivize");
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(report_table({shipped, mutant}, false).find("cnf-positivize") != std::string::npos);
}

TEST_CASE("parameter bounds") {
  auto table = default_g_table();
  Nnccm m{1, 1, {{1, 1, 0, 0}}};
  CHECK(check_parameter_bound("nnccm-to-scheduling", m, table));
  CHECK(apply_reduction("nnccm-to-scheduling", m).constants["machines"] == 3);

  auto g = random_instance("chained-clique", 3, {{"k_min", 2}, {"k_max", 2}, {"r_max", 2}});
  CHECK(check_parameter_bound("cmc-to-nnccm", g, table));
  table["cmc-to-nnccm"] = [](const Instance& s) { return std::get<LayeredGraph>(s).k - 1LL; };
  CHECK_FALSE(check_parameter_bound("cmc-to-nnccm", g, table));
  table.erase("cmc-to-nnccm");
  CHECK_THROWS_AS(check_parameter_bound("cmc-to-nnccm", g, table), UsageError);
  CHECK_THROWS_AS(check_parameter_bound("unknown", g, default_g_table()), UsageError);
}

TEST_CASE("manifest streams") {
  auto manifest = default_manifest();
  CHECK(manifest_budget(manifest) == kDefaultBudget);
  for (const auto& info : reduction_catalog()) CHECK(manifest["reductions"].contains(info.id));
  auto tj = source_stream("ts-to-tj-timer", manifest);
  REQUIRE_FALSE(tj.empty());
  CHECK(std::get<ReconfigurationInstance>(tj.front()).rule == MoveRule::TokenSliding);
  auto pos = source_stream("cnf-positivize", manifest);
  CHECK(pos.size() >= 200);
  CHECK_THROWS_AS(source_stream("cnf-positivize", Json{{"reductions", Json::object()}}), UsageError);
}

TEST_CASE("path decomposition from an order") {
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto pd = pd_from_order(g, {0, 1, 2, 3});
  CHECK(validate_pd(g, pd).empty());
  CHECK(pd_width(pd) == 1);
  auto star = pd_from_order(g, {1, 3, 0, 2});
  CHECK(validate_pd(g, star).empty());
}
