#include "xnlp/instances.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace xnlp {

namespace {

std::string str(long long v) { return std::to_string(v); }

bool sorted_unique(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

void append(std::vector<std::string>& into, std::vector<std::string> from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void check_clauses(const Cnf& cnf, int limit, bool positive, const std::string& where,
                   std::vector<std::string>& d) {
  for (size_t c = 0; c < cnf.size(); ++c)
    for (int lit : cnf[c]) {
      if (lit == 0 || std::abs(lit) > limit)
        d.push_back(where + " clause " + str(c) + " has out-of-range literal " + str(lit));
      else if (positive && lit < 0)
        d.push_back(where + " clause " + str(c) + " has a negated literal but the instance is positive");
    }
}

}  // namespace

std::string kind_name(const Instance& inst) {
  struct V {
    std::string operator()(const CellularAutomaton&) const { return "cellular-automaton"; }
    std::string operator()(const ChainedCnf&) const { return "chained-cnf"; }
    std::string operator()(const LayeredGraph& g) const {
      return g.variant == ChainedVariant::Clique ? "chained-clique" : "chained-independent-set";
    }
    std::string operator()(const Nnccm&) const { return "nnccm"; }
    std::string operator()(const ListColoringInstance&) const { return "list-coloring"; }
    std::string operator()(const PathwidthVertexInstance&) const { return "pathwidth-vertex"; }
    std::string operator()(const SchedulingInstance&) const { return "scheduling"; }
    std::string operator()(const UniformEmulationInstance&) const { return "uniform-emulation"; }
    std::string operator()(const BandwidthInstance&) const { return "bandwidth"; }
    std::string operator()(const ReconfigurationInstance&) const { return "reconfiguration"; }
    std::string operator()(const DfaCollection&) const { return "fsa-intersection"; }
    std::string operator()(const LcsInstance&) const { return "lcs"; }
  };
  return std::visit(V{}, inst);
}

long long parameter_of(const Instance& inst) {
  struct V {
    long long operator()(const CellularAutomaton& x) const { return x.q(); }
    long long operator()(const ChainedCnf& x) const { return x.k; }
    long long operator()(const LayeredGraph& x) const { return x.k; }
    long long operator()(const Nnccm& x) const { return x.k; }
    long long operator()(const ListColoringInstance& x) const { return pd_width(x.pd); }
    long long operator()(const PathwidthVertexInstance& x) const { return pd_width(x.pd); }
    long long operator()(const SchedulingInstance& x) const {
      return x.machines + poset_width(x.num_tasks, x.prec);
    }
    long long operator()(const UniformEmulationInstance& x) const { return x.c; }
    long long operator()(const BandwidthInstance& x) const { return x.k; }
    long long operator()(const ReconfigurationInstance& x) const { return x.tokens; }
    long long operator()(const DfaCollection& x) const { return static_cast<long long>(x.automata.size()); }
    long long operator()(const LcsInstance& x) const { return static_cast<long long>(x.strings.size()); }
  };
  return std::visit(V{}, inst);
}

std::vector<std::string> validate(const CellularAutomaton& ca) {
  std::vector<std::string> d;
  const int s = ca.num_states;
  auto in = [&](int x) { return x >= 0 && x < s; };
  auto boundary = [&](int x) { return x == ca.left || x == ca.right; };
  if (s < 2) d.push_back("a cellular automaton needs at least the two boundary states");
  if (!in(ca.left) || !in(ca.right) || ca.left == ca.right)
    d.push_back("boundary states must be two distinct states");
  for (size_t i = 0; i < ca.transitions.size(); ++i) {
    const auto& z = ca.transitions[i];
    if (!in(z[0]) || !in(z[1]) || !in(z[2]) || !in(z[3]))
      d.push_back("transition " + str(i) + " uses an unknown state");
    else if (boundary(z[1]) || boundary(z[3]))
      d.push_back("transition " + str(i) + " rewrites a boundary state");
  }
  if (!sorted_unique(ca.accepting)) d.push_back("accepting states must be sorted and distinct");
  for (int a : ca.accepting)
    if (!in(a)) d.push_back("accepting state " + str(a) + " out of range");
  if (ca.q() < 2) d.push_back("configuration needs at least the two boundary cells");
  else {
    if (ca.initial.front() != ca.left) d.push_back("cell 1 must hold the left boundary state");
    if (ca.initial.back() != ca.right) d.push_back("cell q must hold the right boundary state");
    for (int i = 1; i + 1 < ca.q(); ++i)
      if (!in(ca.initial[i]) || boundary(ca.initial[i]))
        d.push_back("interior cell " + str(i + 1) + " holds an invalid state");
  }
  if (ca.t < 1) d.push_back("time bound must be at least 1");
  if (!ca.state_names.empty() && static_cast<int>(ca.state_names.size()) != s)
    d.push_back("state names must list one entry per state");
  return d;
}

std::vector<std::string> validate(const ChainedCnf& c) {
  std::vector<std::string> d;
  if (c.r < 1) d.push_back("at least one block is required");
  if (c.q < 0) d.push_back("block size must be non-negative");
  if (c.k < 0 || c.k > c.q) d.push_back("true-count k must lie in [0,q]");
  if (static_cast<int>(c.junctions.size()) != std::max(c.r - 1, 0))
    d.push_back("expected " + str(std::max(c.r - 1, 0)) + " junction clause sets");
  for (size_t i = 0; i < c.junctions.size(); ++i)
    check_clauses(c.junctions[i], 2 * c.q, c.positive, "junction " + str(i + 1), d);
  check_clauses(c.first, c.q, c.positive, "first-block", d);
  check_clauses(c.last, c.q, c.positive, "last-block", d);
  if (c.regular)
    for (size_t i = 1; i < c.junctions.size(); ++i)
      if (c.junctions[i] != c.junctions[0]) {
        d.push_back("regular instance has junction " + str(i + 1) + " differing from the template");
        break;
      }
  if (!c.partition.empty()) {
    if (static_cast<int>(c.partition.size()) != c.k)
      d.push_back("partition must have exactly k groups");
    std::vector<int> owner(std::max(c.q, 0), -1);
    for (size_t g = 0; g < c.partition.size(); ++g) {
      if (c.partition[g].empty()) d.push_back("partition group " + str(g) + " is empty");
      if (!sorted_unique(c.partition[g])) d.push_back("partition group " + str(g) + " must be sorted");
      for (int x : c.partition[g]) {
        if (x < 0 || x >= c.q) {
          d.push_back("partition group " + str(g) + " has out-of-range index " + str(x));
          continue;
        }
        if (owner[x] >= 0) d.push_back("variable " + str(x) + " lies in two partition groups");
        owner[x] = static_cast<int>(g);
      }
    }
    for (int x = 0; x < c.q; ++x)
      if (owner[x] < 0) {
        d.push_back("partition does not cover variable " + str(x));
        break;
      }
  }
  return d;
}

std::vector<std::string> validate(const LayeredGraph& g) {
  auto d = validate_graph(g.graph);
  if (g.r < 1) d.push_back("at least one layer is required");
  if (g.k < 1) d.push_back("at least one color is required");
  if (static_cast<int>(g.layer.size()) != g.graph.n || static_cast<int>(g.color.size()) != g.graph.n) {
    d.push_back("layer and color maps must cover every vertex");
    return d;
  }
  for (int v = 0; v < g.graph.n; ++v) {
    if (g.layer[v] < 1 || g.layer[v] > g.r) d.push_back("vertex " + str(v) + " has layer out of range");
    if (g.color[v] < 1 || g.color[v] > g.k) d.push_back("vertex " + str(v) + " has color out of range");
  }
  if (!d.empty()) return d;
  for (auto [u, v] : g.graph.edges)
    if (std::abs(g.layer[u] - g.layer[v]) > 1)
      d.push_back("edge (" + str(u) + "," + str(v) + ") joins layers more than one apart");
  return d;
}

std::vector<std::string> validate(const Nnccm& m) {
  std::vector<std::string> d;
  if (m.k < 1) d.push_back("at least one counter is required");
  if (m.n < 0) d.push_back("counter ceiling must be non-negative");
  for (size_t i = 0; i < m.checks.size(); ++i) {
    const auto& c = m.checks[i];
    if (c.c1 < 1 || c.c1 > m.k || c.c2 < 1 || c.c2 > m.k)
      d.push_back("check " + str(i + 1) + " names a counter outside [1,k]");
    if (c.r1 < 0 || c.r1 > m.n || c.r2 < 0 || c.r2 > m.n)
      d.push_back("check " + str(i + 1) + " tests a value outside [0,n]");
  }
  return d;
}

std::vector<std::string> validate(const ListColoringInstance& inst) {
  auto d = validate_graph(inst.graph);
  append(d, validate_pd(inst.graph, inst.pd));
  if (static_cast<int>(inst.lists.size()) != inst.graph.n) {
    d.push_back("one color list per vertex is required");
    return d;
  }
  for (int v = 0; v < inst.graph.n; ++v)
    if (!sorted_unique(inst.lists[v])) d.push_back("list of vertex " + str(v) + " must be sorted and distinct");
  if (!inst.precolored.empty()) {
    if (static_cast<int>(inst.precolored.size()) != inst.graph.n) {
      d.push_back("precolored map must cover every vertex");
      return d;
    }
    for (int v = 0; v < inst.graph.n; ++v) {
      int c = inst.precolored[v];
      if (c >= 0 && !std::binary_search(inst.lists[v].begin(), inst.lists[v].end(), c))
        d.push_back("precolored color of vertex " + str(v) + " is not in its list");
    }
  }
  return d;
}

std::vector<std::string> validate(const PathwidthVertexInstance& inst) {
  auto d = validate_graph(inst.graph);
  append(d, validate_pd(inst.graph, inst.pd));
  if (inst.K < 0) d.push_back("size bound K must be non-negative");
  return d;
}

std::vector<std::string> validate(const SchedulingInstance& inst) {
  std::vector<std::string> d;
  if (inst.num_tasks < 0) d.push_back("task count must be non-negative");
  if (inst.machines < 1) d.push_back("at least one machine is required");
  if (inst.deadline < 1) d.push_back("deadline must be positive");
  for (auto [a, b] : inst.prec)
    if (a < 0 || b < 0 || a >= inst.num_tasks || b >= inst.num_tasks)
      d.push_back("precedence (" + str(a) + "," + str(b) + ") names an unknown task");
  if (!d.empty()) return d;
  try {
    transitive_closure(inst.num_tasks, inst.prec);
  } catch (const ValidationError& e) {
    d.push_back(e.what());
  }
  return d;
}

std::vector<std::string> validate(const UniformEmulationInstance& inst) {
  std::vector<std::string> d;
  if (inst.m < 1) d.push_back("target path needs at least one vertex");
  if (inst.c < 1) d.push_back("emulation factor must be positive");
  if (inst.weights.empty()) d.push_back("source path needs at least one vertex");
  for (size_t i = 0; i < inst.weights.size(); ++i)
    if (inst.weights[i] < 1 || inst.weights[i] > inst.c)
      d.push_back("weight of vertex " + str(i + 1) + " lies outside [1,c]");
  return d;
}

std::vector<std::string> validate(const BandwidthInstance& inst) {
  auto d = validate_graph(inst.graph);
  if (inst.k < 0) d.push_back("bandwidth bound must be non-negative");
  return d;
}

bool is_dominating(const std::vector<std::vector<int>>& adj, const std::vector<int>& set) {
  std::vector<char> dom(adj.size(), 0);
  for (int v : set) {
    dom[v] = 1;
    for (int u : adj[v]) dom[u] = 1;
  }
  return std::all_of(dom.begin(), dom.end(), [](char c) { return c != 0; });
}

bool is_independent(const std::vector<std::vector<char>>& mat, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (mat[set[i]][set[j]]) return false;
  return true;
}

bool is_clique(const std::vector<std::vector<char>>& mat, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (!mat[set[i]][set[j]]) return false;
  return true;
}

bool satisfies_kind(const Graph& g, SetKind kind, const std::vector<int>& set) {
  switch (kind) {
    case SetKind::DominatingSet: return is_dominating(adjacency_lists(g), set);
    case SetKind::IndependentSet: return is_independent(adjacency_matrix(g), set);
    case SetKind::Clique: return is_clique(adjacency_matrix(g), set);
  }
  return false;
}

std::vector<std::string> validate(const ReconfigurationInstance& inst) {
  auto d = validate_graph(inst.graph);
  if (!d.empty()) return d;
  if (inst.T < 1) d.push_back("sequence length T must be at least 1");
  if (inst.tokens < 0) d.push_back("token count must be non-negative");
  for (const auto* s : {&inst.start, &inst.target}) {
    const char* name = s == &inst.start ? "start" : "target";
    if (!sorted_unique(*s)) d.push_back(std::string(name) + " set must be sorted and distinct");
    if (static_cast<int>(s->size()) != inst.tokens)
      d.push_back(std::string(name) + " set size differs from the token count");
    bool range_ok = true;
    for (int v : *s)
      if (v < 0 || v >= inst.graph.n) range_ok = false;
    if (!range_ok) {
      d.push_back(std::string(name) + " set has an out-of-range vertex");
      continue;
    }
    if (!satisfies_kind(inst.graph, inst.kind, *s))
      d.push_back(std::string(name) + " set does not satisfy the set predicate");
  }
  return d;
}

std::vector<std::string> validate(const DfaCollection& col) {
  std::vector<std::string> d;
  if (col.alphabet < 1) d.push_back("alphabet must be non-empty");
  if (!col.symbols.empty() && static_cast<int>(col.symbols.size()) != col.alphabet)
    d.push_back("symbol names must list one entry per symbol");
  for (size_t a = 0; a < col.automata.size(); ++a) {
    const auto& m = col.automata[a];
    std::string who = "automaton " + str(a);
    if (m.states < 1) {
      d.push_back(who + " has no states");
      continue;
    }
    if (m.start < 0 || m.start >= m.states) d.push_back(who + " has start state out of range");
    if (static_cast<long long>(m.delta.size()) != static_cast<long long>(m.states) * col.alphabet) {
      d.push_back(who + " transition function is not total");
      continue;
    }
    for (int t : m.delta)
      if (t < 0 || t >= m.states) {
        d.push_back(who + " has a transition to an unknown state");
        break;
      }
    if (!sorted_unique(m.accepting)) d.push_back(who + " accepting set must be sorted and distinct");
    for (int s : m.accepting)
      if (s < 0 || s >= m.states) d.push_back(who + " accepting state out of range");
  }
  if (col.acyclic && d.empty()) {
    for (size_t a = 0; a < col.automata.size(); ++a) {
      const auto& m = col.automata[a];
      std::vector<int> indeg(m.states, 0);
      std::vector<std::set<int>> out(m.states);
      for (int s = 0; s < m.states; ++s)
        for (int x = 0; x < col.alphabet; ++x) {
          int t = m.delta[static_cast<size_t>(s) * col.alphabet + x];
          if (t != s) out[s].insert(t);
        }
      for (int s = 0; s < m.states; ++s)
        for (int t : out[s]) ++indeg[t];
      std::vector<int> queue;
      for (int s = 0; s < m.states; ++s)
        if (!indeg[s]) queue.push_back(s);
      size_t seen = 0;
      while (seen < queue.size()) {
        int s = queue[seen++];
        for (int t : out[s])
          if (--indeg[t] == 0) queue.push_back(t);
      }
      if (static_cast<int>(queue.size()) != m.states)
        d.push_back("automaton " + str(a) + " has a cycle other than a self-loop");
    }
  }
  return d;
}

std::vector<std::string> validate(const LcsInstance& inst) {
  std::vector<std::string> d;
  if (inst.strings.empty()) d.push_back("at least one string is required");
  if (inst.m < 0) d.push_back("target length must be non-negative");
  return d;
}

std::vector<std::string> validate(const Instance& inst) {
  return std::visit([](const auto& x) { return validate(x); }, inst);
}

std::vector<std::vector<char>> transitive_closure(int n, const std::vector<std::pair<int, int>>& dag) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : dag) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) order.push_back(v);
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : out[order[i]])
      if (--indeg[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != n) throw ValidationError("not a partial order");
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    for (int w : out[v]) {
      reach[v][w] = 1;
      for (int x = 0; x < n; ++x)
        if (reach[w][x]) reach[v][x] = 1;
    }
  }
  return reach;
}

int poset_width_exhaustive(int n, const std::vector<std::pair<int, int>>& dag) {
  auto reach = transitive_closure(n, dag);
  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int v) {
    if (static_cast<int>(chosen.size()) + (n - v) <= best) return;
    if (v == n) {
      best = std::max(best, static_cast<int>(chosen.size()));
      return;
    }
    bool ok = true;
    for (int u : chosen)
      if (reach[u][v] || reach[v][u]) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
    rec(v + 1);
  };
  rec(0);
  return best;
}

int poset_width_matching(int n, const std::vector<std::pair<int, int>>& dag) {
  auto reach = transitive_closure(n, dag);
  // Dilworth: width = n - maximum matching in the comparability split graph.
  std::vector<int> match_right(n, -1);
  std::vector<char> used;
  std::function<bool(int)> augment = [&](int u) {
    for (int v = 0; v < n; ++v) {
      if (!reach[u][v] || used[v]) continue;
      used[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u = 0; u < n; ++u) {
    used.assign(n, 0);
    if (augment(u)) ++matching;
  }
  return n - matching;
}

int poset_width(int n, const std::vector<std::pair<int, int>>& dag) {
  return n < 20 ? poset_width_exhaustive(n, dag) : poset_width_matching(n, dag);
}

std::vector<std::vector<int>> effective_lists(const ListColoringInstance& inst) {
  auto lists = inst.lists;
  if (!inst.precolored.empty())
    for (int v = 0; v < inst.graph.n; ++v)
      if (inst.precolored[v] >= 0) lists[v] = {inst.precolored[v]};
  return lists;
}

}  // namespace xnlp
