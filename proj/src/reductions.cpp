#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "xnlp/reductions.hpp"

namespace xnlp {

Json reduction_to_json(const ReductionOutput& out) {
  Json j;
  j["target"] = to_json(out.target);
  j["parameter"] = out.parameter;
  j["constants"] = out.constants;
  return j;
}

namespace {

struct Entry {
  ReductionInfo info;
  std::function<ReductionOutput(const Instance&, int)> apply;
  std::function<long long(const Instance&)> bound;
};

template <class T>
const T& as(const Instance& inst, const std::string& id) {
  if (auto p = std::get_if<T>(&inst)) return *p;
  throw ValidationError(id + " cannot take a " + kind_name(inst) + " instance");
}

template <class T>
Entry entry(ReductionInfo info, ReductionOutput (*fn)(const T&, int), std::function<long long(const T&)> bound) {
  const std::string id = info.id;
  return Entry{std::move(info), [fn, id](const Instance& s, int m) { return fn(as<T>(s, id), m); },
               [bound, id](const Instance& s) { return bound(as<T>(s, id)); }};
}

int ceil_log2(long long v) {
  int t = 0;
  while ((1LL << t) < v) ++t;
  return t;
}

int log_pw_bits(const ChainedCnf& c) {
  size_t largest = 1;
  for (const auto& g : c.partition) largest = std::max(largest, g.size());
  return std::max(1, ceil_log2(static_cast<long long>(largest)));
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> e;
    e.push_back(entry<CellularAutomaton>(
        {"ca-annotate-time", "cellular-automaton", "cellular-automaton", "q", "states tagged with their time step plus a sink",
         {"sink transitions for every interior state, accepting or not"}},
        ca_annotate_time, [](const CellularAutomaton& a) { return static_cast<long long>(a.q()); }));
    e.push_back(entry<CellularAutomaton>(
        {"ca-to-chained-sat", "cellular-automaton", "chained-cnf", "2q-2", "one block of state and transition variables per time step",
         {"transition-existence clauses dropped"}},
        ca_to_chained_sat, [](const CellularAutomaton& a) { return 2LL * a.q() - 2; }));
    e.push_back(entry<ChainedCnf>({"cnf-positivize", "chained-cnf", "chained-cnf", "k", "negative literals replaced by the rest of their group",
                                   {"negated variable kept inside its replacement"}},
                                  cnf_positivize, [](const ChainedCnf& c) { return static_cast<long long>(c.k); }));
    e.push_back(entry<ChainedCnf>({"cnf-regularize-ii", "chained-cnf", "chained-cnf", "k+1", "position trackers fold boundary formulas into the template",
                                   {"last-block clauses not folded in"}},
                                  cnf_regularize_ii,
                                  [](const ChainedCnf& c) { return static_cast<long long>(c.k) + 1; }));
    e.push_back(entry<ChainedCnf>({"chained-sat-to-list-coloring", "chained-cnf", "list-coloring", "2k+1",
                                   "group vertices, clause vertices and blocker vertices", {"w vertices not joined to their group vertex"}},
                                  chained_sat_to_list_coloring,
                                  [](const ChainedCnf& c) { return 2LL * c.k + 1; }));
    e.push_back(entry<ListColoringInstance>(
        {"list-coloring-to-precoloring", "list-coloring", "list-coloring", "w+1", "precolored pendants remove forbidden colors",
         {"pendants for every palette color, including allowed ones"}},
        list_coloring_to_precoloring, [](const ListColoringInstance& l) { return pd_width(l.pd) + 1LL; }));
    e.push_back(entry<ListColoringInstance>(
        {"list-coloring-to-cmc", "list-coloring", "chained-clique", "w+1", "one layer per bag, one color class per bag slot",
         {"same vertex may change color between consecutive layers"}},
        list_coloring_to_cmc,
        [](const ListColoringInstance& l) { return std::max(pd_width(l.pd), 0) + 1LL; }));
    e.push_back(entry<LayeredGraph>({"partial-complement", "chained-clique", "chained-independent-set", "k",
                                     "complement within and between adjacent layers", {"same-layer pairs copied, not complemented"}},
                                    partial_complement,
                                    [](const LayeredGraph& g) { return static_cast<long long>(g.k); }));
    e.push_back(entry<LayeredGraph>({"cmc-to-nnccm", "chained-clique", "nnccm", "4k", "vertex selection and non-edge checks on 4k counters",
                                     {"cross-layer non-edge checks dropped"}},
                                    cmc_to_nnccm, [](const LayeredGraph& g) { return 4LL * g.k; }));
    e.push_back(entry<Nnccm>({"nnccm-to-scheduling", "nnccm", "scheduling", "(2k+1)+3(k+1)", "time line, indicators, counter chains and check tasks",
                              {"only the first check task per indicator time"}},
                             nnccm_to_scheduling, [](const Nnccm& m) { return 2LL * m.k + 1 + 3LL * (m.k + 1); }));
    e.push_back(entry<Nnccm>({"nnccm-to-uniform-emulation", "nnccm", "uniform-emulation", "2k*d3+1 with k raised to at least 3",
                              "floor, counter components and filler path", {"heavy main-path vertices get weight one"}},
                             nnccm_to_uniform_emulation, [](const Nnccm& m) {
                               return emulation_constants(std::max(m.k, 3), m.n,
                                                          static_cast<long long>(m.checks.size()))
                                   .c;
                             }));
    e.push_back(entry<ChainedCnf>({"chained-sat-to-log-pw-domset", "chained-cnf", "pathwidth-vertex",
                                   "6kt+4k+2", "triangle bit gadgets and clause gadgets",
                                   {"clause vertex joined to every variable vertex"}},
                                  chained_sat_to_log_pw_domset, [](const ChainedCnf& c) {
                                    return 6LL * c.k * log_pw_bits(c) + 4LL * c.k + 2;
                                  }));
    e.push_back(entry<ChainedCnf>({"chained-sat-to-log-pw-indset", "chained-cnf", "pathwidth-vertex", "4kt+6",
                                   "edge bit gadgets and double-path clause gadgets",
                                   {"rungs between the two clause paths dropped"}},
                                  chained_sat_to_log_pw_indset,
                                  [](const ChainedCnf& c) { return 4LL * c.k * log_pw_bits(c) + 6; }));
    e.push_back(entry<PathwidthVertexInstance>(
        {"log-pw-clique-to-weighted-cnf", "pathwidth-vertex", "chained-cnf", "2k'+2", "bag selector, clique subsets and size counters",
         {"conflict clauses between groups dropped"}},
        log_pw_clique_to_weighted_cnf, [](const PathwidthVertexInstance& p) {
          long long n = p.graph.n;
          int g = 0;
          while ((2LL << g) <= n) ++g;
          g = std::max(g, 1);
          long long bag = std::max(pd_width(p.pd), 0) + 1LL;
          return 2 * std::max(1LL, (bag + g - 1) / g) + 2;
        }));
    e.push_back(entry<ChainedCnf>({"chained-sat-to-ts-ds-reconfig", "chained-cnf", "reconfiguration", "2k+2",
                                   "timer path, variable tokens and guardians",
                                   {"clause vertices dominated at every timer position"}},
                                  chained_sat_to_ts_ds_reconfig, [](const ChainedCnf& c) { return 2LL * c.k + 2; }));
    e.push_back(entry<ReconfigurationInstance>(
        {"ts-to-tj-timer", "reconfiguration", "reconfiguration", "k+1", "second timer path locked to the first",
         {"position guardians miss the lagging second-timer vertex"}},
        ts_to_tj_timer, [](const ReconfigurationInstance& r) { return r.tokens + 1LL; }));
    e.push_back(entry<LayeredGraph>({"cmc-to-tj-clique-reconfig", "chained-clique", "reconfiguration", "2k",
                                     "sentinel layers and distance-two edges", {"last layer not joined to V_{r+1}"}},
                                    cmc_to_tj_clique_reconfig, [](const LayeredGraph& g) { return 2LL * g.k; }));
    e.push_back(entry<ReconfigurationInstance>(
        {"reconfig-complement", "reconfiguration", "reconfiguration", "k", "graph complement",
         {"time bound reduced by one"}},
        reconfig_complement, [](const ReconfigurationInstance& r) { return static_cast<long long>(r.tokens); }));
    e.push_back(entry<LayeredGraph>({"cmc-to-ts-clique-reconfig", "chained-clique", "reconfiguration", "2k",
                                     "sentinel layers, color-ordered distance-two edges", {"last layer not joined to V_{r+1}"}},
                                    cmc_to_ts_clique_reconfig, [](const LayeredGraph& g) { return 2LL * g.k; }));
    e.push_back(entry<LcsInstance>({"lcs-to-acyclic-fsa", "lcs", "fsa-intersection", "k+1",
                                    "length automaton and subsequence automata",
                                    {"length automaton one state short", "last-occurrence transitions"}},
                                   lcs_to_acyclic_fsa,
                                   [](const LcsInstance& l) { return static_cast<long long>(l.strings.size()) + 1; }));
    e.push_back(entry<DfaCollection>({"fsa-binarize", "fsa-intersection", "fsa-intersection", "k",
                                      "binary decoding trees per state", {"decoding-tree nodes made accepting"}},
                                     fsa_binarize,
                                     [](const DfaCollection& d) { return static_cast<long long>(d.automata.size()); }));
    return e;
  }();
  return all;
}

const Entry& find(std::string id) {
  std::replace(id.begin(), id.end(), '_', '-');
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw UsageError("unknown reduction '" + id + "'");
}

}  // namespace

const std::vector<ReductionInfo>& reduction_catalog() {
  static const std::vector<ReductionInfo> infos = [] {
    std::vector<ReductionInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const ReductionInfo& reduction_info(const std::string& id) { return find(id).info; }

ReductionOutput apply_reduction(const std::string& id, const Instance& source, int mutant) {
  const auto& e = find(id);
  if (mutant < 0 || mutant > static_cast<int>(e.info.mutants.size()))
    throw UsageError(id + " has no mutant " + std::to_string(mutant));
  return e.apply(source, mutant);
}

long long parameter_bound(const std::string& id, const Instance& source) { return find(id).bound(source); }

}  // namespace xnlp
