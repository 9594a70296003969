#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "xnlp/harness.hpp"
#include "xnlp/solvers.hpp"

namespace xnlp {

OracleVerdict oracle(const Instance& inst, std::uint64_t budget) {
  for (auto [mode, name] : {std::pair{SolveMode::Exhaustive, "exhaustive"}, std::pair{SolveMode::Structured, "structured"}}) {
    try {
      return {true, solve(inst, mode, budget).decision, name};
    } catch (const ResourceError&) {
    }
  }
  return {false, false, "skipped"};
}

namespace {

int ceil_log2(long long v) {
  int t = 0;
  while ((1LL << t) < v) ++t;
  return t;
}

int group_bits(const ChainedCnf& c) {
  size_t largest = 1;
  for (const auto& g : c.partition) largest = std::max(largest, g.size());
  return std::max(1, ceil_log2(static_cast<long long>(largest)));
}

// Number of padded (block, group, slot) triples satisfying each junction clause
// of a logarithmic-pathwidth construction, padding clauses included.
std::vector<long long> satisfier_counts(const ChainedCnf& c) {
  std::vector<long long> out;
  if (c.r < 2) return out;
  const int slots = 1 << group_bits(c);
  std::vector<int> owner(c.q), slot(c.q);
  for (size_t g = 0; g < c.partition.size(); ++g)
    for (size_t p = 0; p < c.partition[g].size(); ++p) {
      owner[c.partition[g][p]] = static_cast<int>(g);
      slot[c.partition[g][p]] = static_cast<int>(p);
    }
  for (const auto& cl : c.junctions[0]) {
    std::set<std::tuple<int, int, int>> sat;
    for (int lit : cl) {
      int v = std::abs(lit) - 1, block = v / c.q, x = v % c.q;
      for (int p = 0; p < slots; ++p)
        if ((lit > 0) == (p == slot[x])) sat.insert({block, owner[x], p});
    }
    out.push_back(static_cast<long long>(sat.size()));
  }
  for (int block = 0; block < 2; ++block)
    for (const auto& g : c.partition)
      if (static_cast<int>(g.size()) < slots) out.push_back(static_cast<long long>(g.size()));
  return out;
}

// Constants read off the emitted instance itself, overriding what the
// reduction reports about its own output.
Json observed_constants(const std::string& id, const ReductionOutput& out) {
  Json o = out.constants;
  if (auto s = std::get_if<SchedulingInstance>(&out.target)) {
    o["machines"] = s->machines;
    o["D"] = s->deadline;
    o["poset_width"] = poset_width(s->num_tasks, s->prec);
  } else if (auto u = std::get_if<UniformEmulationInstance>(&out.target)) {
    o["c"] = u->c;
    o["M"] = u->m;
  } else if (auto p = std::get_if<PathwidthVertexInstance>(&out.target)) {
    o["K"] = p->K;
    o["width"] = pd_width(p->pd);
  } else if (auto r = std::get_if<ReconfigurationInstance>(&out.target)) {
    o["tokens"] = r->tokens;
    o["T"] = r->T;
  } else if (auto d = std::get_if<DfaCollection>(&out.target)) {
    o["automata"] = d->automata.size();
    if (id == "lcs-to-acyclic-fsa") o["length_states"] = d->automata.front().states;
  } else if (auto l = std::get_if<ListColoringInstance>(&out.target)) {
    o["width"] = pd_width(l->pd);
  } else if (auto n = std::get_if<Nnccm>(&out.target)) {
    o["counters"] = n->k;
  }
  return o;
}

// Keys whose expected value is an upper bound rather than an exact value.
bool is_upper_bound(const std::string& key) { return key == "width" || key == "poset_width"; }

}  // namespace

Json expected_constants(const std::string& raw_id, const Instance& source) {
  const std::string id = reduction_info(raw_id).id;
  Json e = Json::object();
  if (id == "chained-sat-to-log-pw-domset" || id == "chained-sat-to-log-pw-indset") {
    const auto& c = std::get<ChainedCnf>(source);
    const long long r = c.r, k = c.k, t = group_bits(c);
    const auto sat = satisfier_counts(c);
    e["t"] = t;
    e["clauses"] = sat.size();
    if (id == "chained-sat-to-log-pw-domset") {
      e["K"] = r * k * t + 2 * k * static_cast<long long>(sat.size()) * (r - 1);
      e["width"] = 6 * k * t + 4 * k + 2;
    } else {
      long long gadgets = 0;
      for (long long s : sat) gadgets += s + s % 2 + 2;
      e["K"] = r * k * t + (r - 1) * gadgets;
      e["width"] = 4 * k * t + 6;
    }
  } else if (id == "nnccm-to-scheduling") {
    const auto& m = std::get<Nnccm>(source);
    const long long k = m.k, n = m.n, r = static_cast<long long>(m.checks.size());
    const long long c = (k * n + 1) * (n + 1);
    e["c"] = c;
    e["D"] = c * r + n + 1;
    e["machines"] = 2 * k + 1;
    e["poset_width"] = 3 * (k + 1);
  } else if (id == "nnccm-to-uniform-emulation") {
    const auto& m = std::get<Nnccm>(source);
    const long long k = std::max(m.k, 3), n = m.n, r = static_cast<long long>(m.checks.size());
    const long long d1 = 3 * k + 2, d2 = k * d1 + 1, d3 = k * d2 + 1, n0 = 3 * n + 1;
    e["d1"] = d1;
    e["d2"] = d2;
    e["d3"] = d3;
    e["c"] = 2 * k * d3 + 1;
    e["n0"] = n0;
    e["M"] = 1 + (r + 1) * n0;
  } else if (id == "chained-sat-to-ts-ds-reconfig") {
    const auto& c = std::get<ChainedCnf>(source);
    const long long r = c.r + c.r % 2, k = c.k;
    e["tokens"] = 2 * k + 2;
    e["moves"] = k * (r + 2) + 2 * r - 2;
    e["T_short"] = 5 * r / 2 - 2;
  } else if (id == "ts-to-tj-timer") {
    const auto& r = std::get<ReconfigurationInstance>(source);
    e["tokens"] = r.tokens + 1;
  } else if (id == "cmc-to-tj-clique-reconfig" || id == "cmc-to-ts-clique-reconfig") {
    const auto& g = std::get<LayeredGraph>(source);
    const long long moves = static_cast<long long>(g.k) * (g.r + 2);
    e["tokens"] = 2 * g.k;
    e["moves"] = moves;
    e["T"] = moves + 1;
  } else if (id == "reconfig-complement") {
    const auto& r = std::get<ReconfigurationInstance>(source);
    e["tokens"] = r.tokens;
    e["T"] = r.T;
  } else if (id == "lcs-to-acyclic-fsa") {
    const auto& l = std::get<LcsInstance>(source);
    e["automata"] = l.strings.size() + 1;
    e["length_states"] = l.m + 1;
  } else if (id == "chained-sat-to-list-coloring") {
    const auto& c = std::get<ChainedCnf>(source);
    e["width"] = 2 * c.k + 1;
  } else if (id == "cmc-to-nnccm") {
    const auto& g = std::get<LayeredGraph>(source);
    e["counters"] = 4 * g.k;
  } else if (id == "ca-to-chained-sat") {
    const auto& ca = std::get<CellularAutomaton>(source);
    const long long q = ca.q();
    e["block_size"] = q * ca.num_states + std::max(q - 2, 0LL) * static_cast<long long>(ca.transitions.size());
    e["blocks"] = ca.t + 1;
    e["k"] = 2 * q - 2;
  }
  return e;
}

GTable default_g_table() {
  GTable t;
  for (const auto& info : reduction_catalog()) {
    const std::string id = info.id;
    t[id] = [id](const Instance& s) { return parameter_bound(id, s); };
  }
  return t;
}

bool check_parameter_bound(const std::string& raw_id, const Instance& source, const GTable& g_table) {
  const std::string id = reduction_info(raw_id).id;
  auto it = g_table.find(id);
  if (it == g_table.end()) throw UsageError("no parameter bound declared for '" + id + "'");
  return apply_reduction(id, source).parameter <= it->second(source);
}

namespace {

struct Outcome {
  enum Kind { Skipped, Agree, Disagree } kind = Skipped;
  bool yes = false;
  bool bound_violation = false, constant_mismatch = false, invalid = false;
  Json detail;
};

Outcome run_one(const std::string& id, const Instance& source, std::uint64_t budget, int mutant) {
  Outcome o;
  auto fail = [&](const std::string& what, Json extra = Json::object()) {
    if (o.detail.is_null()) {
      o.detail = {{"failure", what}, {"source", to_json(source)}};
      for (auto& [k, v] : extra.items()) o.detail[k] = v;
    }
  };
  ReductionOutput out;
  try {
    out = apply_reduction(id, source, mutant);
  } catch (const ResourceError&) {
    return o;
  } catch (const ValidationError& e) {
    o.invalid = true;
    fail("construction rejected its source", {{"error", e.what()}});
    return o;
  }
  auto diags = validate(out.target);
  if (!diags.empty()) {
    o.invalid = true;
    fail("emitted instance is invalid", {{"error", diags.front()}});
    return o;
  }
  const long long bound = parameter_bound(id, source);
  const long long actual = parameter_of(out.target);
  if (out.parameter > bound || actual > bound) {
    o.bound_violation = true;
    fail("parameter bound exceeded", {{"parameter", std::max(out.parameter, actual)}, {"bound", bound}});
  }
  const Json expected = expected_constants(id, source), observed = observed_constants(id, out);
  for (auto& [key, want] : expected.items()) {
    bool ok = observed.contains(key) &&
              (is_upper_bound(key) ? observed[key].get<long long>() <= want.get<long long>() : observed[key] == want);
    if (!ok) {
      o.constant_mismatch = true;
      fail("constant mismatch", {{"constant", key}, {"expected", want}, {"observed", observed.value(key, Json())}});
    }
  }
  const auto src = oracle(source, budget);
  if (!src.decided) return o;
  const auto dst = oracle(out.target, budget);
  if (!dst.decided) return o;
  o.kind = src.decision == dst.decision ? Outcome::Agree : Outcome::Disagree;
  o.yes = src.decision;
  if (o.kind == Outcome::Disagree)
    o.detail = {{"source", to_json(source)},
                {"source_decision", src.decision},
                {"target_decision", dst.decision},
                {"source_oracle", src.mode},
                {"target_oracle", dst.mode}};
  return o;
}

}  // namespace

ReductionReport verify_reduction(const std::string& raw_id, const std::vector<Instance>& stream, std::uint64_t budget,
                                 int mutant) {
  const std::string id = reduction_info(raw_id).id;
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(stream.size());
  const size_t workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
  std::vector<std::future<void>> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < stream.size(); i += workers) outcomes[i] = run_one(id, stream[i], budget, mutant);
    }));
  for (auto& f : pool) f.get();

  ReductionReport rep;
  rep.id = id;
  rep.mutant = mutant;
  for (auto& o : outcomes) {
    if (o.kind == Outcome::Skipped) ++rep.skipped;
    rep.yes_sources += o.yes;
    if (o.kind == Outcome::Agree) ++rep.agreements;
    if (o.kind == Outcome::Disagree) {
      ++rep.disagreements;
      if (!rep.counterexample) rep.counterexample = o.detail;
    }
    rep.bound_violations += o.bound_violation;
    rep.constant_mismatches += o.constant_mismatch;
    rep.invalid_targets += o.invalid;
    if ((o.bound_violation || o.constant_mismatch || o.invalid) && !rep.first_failure) rep.first_failure = o.detail;
  }
  rep.tried = rep.agreements + rep.disagreements;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Json report_to_json(const ReductionReport& r, bool timing) {
  Json j;
  j["reduction"] = r.id;
  j["mutant"] = r.mutant;
  j["tried"] = r.tried;
  j["agreements"] = r.agreements;
  j["disagreements"] = r.disagreements;
  j["skipped"] = r.skipped;
  j["yes_sources"] = r.yes_sources;
  j["bound_violations"] = r.bound_violations;
  j["constant_mismatches"] = r.constant_mismatches;
  j["invalid_targets"] = r.invalid_targets;
  j["sound"] = r.sound();
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

std::string report_table(const std::vector<ReductionReport>& reports, bool timing) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %3s %6s %5s %6s %6s %7s %5s %5s %5s %s\n", "reduction", "mut", "tried", "yes", "agree",
                "disagr", "skipped", "bound", "const", "inval", timing ? "ms" : "");
  os << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-32s %3d %6lld %5lld %6lld %6lld %7lld %5lld %5lld %5lld", r.id.c_str(), r.mutant,
                  r.tried, r.yes_sources, r.agreements, r.disagreements, r.skipped, r.bound_violations, r.constant_mismatches,
                  r.invalid_targets);
    os << line;
    if (timing) {
      std::snprintf(line, sizeof line, " %.0f", r.wall_ms);
      os << line;
    }
    os << '\n';
  }
  return os.str();
}

Json default_manifest() {
  auto rnd = [](const std::string& kind, int count, Json params) {
    if (!params.is_array()) params = Json::array({params});
    return Json{{"kind", kind}, {"count", count}, {"params", params}};
  };
  Json cnf_small = {{"r_max", 3}, {"k_max", 2}, {"group_max", 2}, {"clauses_max", 3}, {"literals_max", 3}};
  Json positive = cnf_small;
  positive["positive"] = true;
  Json reductions = Json::object();
  reductions["ca-annotate-time"] =
      rnd("cellular-automaton", 240, {{"acceptance", "all"}, {"q_max", 4}, {"states_max", 4}, {"t_max", 2}});
  reductions["ca-to-chained-sat"] =
      rnd("cellular-automaton", 240,
          Json::array({{{"q_max", 3}, {"states_max", 3}, {"transitions_max", 3}, {"t_max", 2}},
                       {{"q_max", 3}, {"states_max", 4}, {"transitions_min", 2}, {"transitions_max", 6}, {"t_max", 2}},
                       {{"q_max", 3}, {"states_max", 3}, {"transitions_min", 3}, {"transitions_max", 8}, {"accept_prob", 0.8},
                        {"t_max", 2}}}));
  reductions["cnf-positivize"] = {{"enumerate",
                                   {{{"kind", "chained-cnf"},
                                     {"bounds", {{"r", 2}, {"q", 2}, {"k", 1}, {"clauses", 2}, {"literals", 2},
                                                 {"partition", {{0, 1}}}}}},
                                    {{"kind", "chained-cnf"},
                                     {"bounds", {{"r", 2}, {"q", 2}, {"k", 2}, {"clauses", 2}, {"literals", 2},
                                                 {"partition", {{0}, {1}}}}}}}}};
  Json boundary = cnf_small;
  boundary["boundary"] = true;
  boundary["r_min"] = 2;
  boundary["regular"] = true;
  reductions["cnf-regularize-ii"] = rnd("chained-cnf", 240, boundary);
  Json positive_tight = positive;
  positive_tight["clauses_max"] = 5;
  positive_tight["literals_max"] = 1;
  reductions["chained-sat-to-list-coloring"] = rnd("chained-cnf", 240, Json::array({positive, positive_tight}));
  reductions["list-coloring-to-precoloring"] = rnd("list-coloring", 240, {{"n_max", 5}, {"colors", 3}});
  reductions["list-coloring-to-cmc"] =
      rnd("list-coloring", 240,
          Json::array({{{"n_max", 5}, {"colors", 2}, {"density", 0.35}, {"list_prob", 0.6}, {"slack", 0.9}},
                       {{"n_max", 6}, {"colors", 3}, {"density", 0.4}, {"list_prob", 0.4}, {"slack", 0.9}}}));
  reductions["partial-complement"] = rnd("chained-clique", 240, {{"r_max", 3}, {"k_max", 2}});
  reductions["cmc-to-nnccm"] =
      rnd("chained-clique", 240,
          Json::array({{{"r_max", 2}, {"k_max", 2}, {"per_class_max", 1}},
                       {{"r_max", 2}, {"k_max", 1}, {"per_class_max", 2}},
                       {{"r_max", 3}, {"k_max", 1}, {"per_class_max", 1}}}));
  reductions["nnccm-to-scheduling"] =
      rnd("nnccm", 240, Json::array({{{"k_max", 2}, {"n_max", 1}, {"r_max", 2}}, {{"k_max", 1}, {"n_max", 1}, {"r_min", 3}, {"r_max", 4}}}));
  reductions["nnccm-to-uniform-emulation"] =
      rnd("nnccm", 220, Json::array({{{"k_max", 2}, {"n_max", 1}, {"r_max", 1}}, {{"k_max", 1}, {"n_max", 1}, {"r_max", 2}}}));
  Json one_bit = {{"r_max", 3}, {"k_max", 1}, {"group_max", 2}, {"clauses_max", 4}, {"literals_max", 2}, {"neg_prob", 0.5}};
  Json two_bits = {{"r_min", 2},         {"r_max", 2},         {"k_max", 2},        {"group_max", 3},
                   {"clauses_max", 5}, {"literals_max", 2}, {"neg_prob", 0.5}};
  reductions["chained-sat-to-log-pw-domset"] =
      rnd("chained-cnf", 240,
          Json::array({one_bit, {{"r_max", 2}, {"k_max", 1}, {"group_max", 3}, {"clauses_max", 3}, {"literals_max", 2}}}));
  reductions["chained-sat-to-log-pw-indset"] = rnd("chained-cnf", 240, Json::array({one_bit, two_bits}));
  reductions["log-pw-clique-to-weighted-cnf"] =
      rnd("pathwidth-vertex", 240, {{"problem", "clique"}, {"n_max", 5}, {"K_max", 3}});
  Json ts = {{"positive", true}, {"r_max", 3}, {"k_max", 1}, {"group_max", 2}, {"clauses_max", 2}, {"literals_max", 2}};
  Json ts_tight = ts;
  ts_tight["clauses_max"] = 4;
  ts_tight["literals_max"] = 1;
  reductions["chained-sat-to-ts-ds-reconfig"] = rnd("chained-cnf", 240, Json::array({ts, ts_tight}));
  Json ts_short = ts;
  ts_short["r_max"] = 2;
  reductions["ts-to-tj-timer"] = rnd("chained-cnf", 220, Json::array({ts_short, ts}));
  reductions["ts-to-tj-timer"]["via"] = "chained-sat-to-ts-ds-reconfig";
  Json cmc = {{"r_max", 3}, {"k_max", 2}, {"per_class_max", 2}};
  reductions["cmc-to-tj-clique-reconfig"] = rnd("chained-clique", 240, cmc);
  reductions["cmc-to-ts-clique-reconfig"] = rnd("chained-clique", 240, cmc);
  reductions["reconfig-complement"] = rnd("chained-clique", 240, cmc);
  reductions["reconfig-complement"]["via"] = "cmc-to-tj-clique-reconfig";
  reductions["lcs-to-acyclic-fsa"] = rnd("lcs", 240, {{"strings_max", 3}, {"length_max", 4}, {"m_max", 4}});
  reductions["fsa-binarize"] =
      rnd("fsa-intersection", 240,
          Json::array({{{"alphabet_max", 4}, {"states_max", 3}}, {{"alphabet_max", 3}, {"acyclic", true}}}));
  return Json{{"budget", kDefaultBudget}, {"seed", 1}, {"reductions", reductions}};
}

std::uint64_t manifest_budget(const Json& manifest) { return manifest.value("budget", kDefaultBudget); }

std::vector<Instance> source_stream(const std::string& raw_id, const Json& manifest) {
  const std::string id = reduction_info(raw_id).id;
  if (!manifest.contains("reductions") || !manifest["reductions"].contains(id))
    throw UsageError("manifest has no stream for '" + id + "'");
  const Json& entry = manifest["reductions"][id];
  std::vector<Instance> out;
  if (entry.contains("enumerate")) {
    for (const auto& part : entry["enumerate"]) {
      auto more = enumerate_instances(part.at("kind"), part.at("bounds"));
      out.insert(out.end(), more.begin(), more.end());
    }
  } else {
    const std::string kind = entry.at("kind");
    const Json& params = entry.at("params");
    const int count = entry.at("count");
    const std::uint64_t seed = entry.value("seed", manifest.value("seed", std::uint64_t{1}));
    for (int i = 0; i < count; ++i) {
      const Json& p = params.is_array() ? params[i % params.size()] : params;
      out.push_back(random_instance(kind, seed * 1'000'003ULL + static_cast<std::uint64_t>(i), p));
    }
  }
  if (entry.contains("via")) {
    std::vector<Instance> lifted;
    for (const auto& s : out) lifted.push_back(apply_reduction(entry["via"], s).target);
    out = std::move(lifted);
  }
  return out;
}

}  // namespace xnlp
