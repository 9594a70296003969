#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "xnlp/harness.hpp"

namespace xnlp {

PathDecomposition pd_from_order(const Graph& g, const std::vector<int>& order) {
  const auto adj = adjacency_lists(g);
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  std::vector<int> last(g.n);
  for (int v = 0; v < g.n; ++v) {
    last[v] = pos[v];
    for (int w : adj[v]) last[v] = std::max(last[v], pos[w]);
  }
  PathDecomposition pd;
  for (int i = 0; i < g.n; ++i) {
    std::vector<int> bag{order[i]};
    for (int j = 0; j < i; ++j)
      if (last[order[j]] >= i) bag.push_back(order[j]);
    std::sort(bag.begin(), bag.end());
    pd.bags.push_back(bag);
  }
  return pd;
}

namespace {

class Rng {
 public:
  Rng(const std::string& kind, std::uint64_t seed) : gen_(seed * 0x9E3779B97F4A7C15ULL ^ std::hash<std::string>{}(kind)) {}
  int range(int lo, int hi) { return hi <= lo ? lo : std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p) { return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(gen_); }
  template <class T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), gen_); }

 private:
  std::mt19937_64 gen_;
};

Graph random_graph(Rng& rng, int n, double density) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(density)) e.push_back({u, v});
  return make_graph(n, e);
}

std::vector<int> random_order(Rng& rng, int n) {
  std::vector<int> o(n);
  for (int i = 0; i < n; ++i) o[i] = i;
  rng.shuffle(o);
  return o;
}

// A decomposition from a random order, optionally stretched by repeating the
// intersection of consecutive bags.
PathDecomposition random_pd(Rng& rng, const Graph& g, double slack) {
  auto pd = pd_from_order(g, random_order(rng, g.n));
  if (slack <= 0) return pd;
  PathDecomposition out;
  for (size_t i = 0; i < pd.bags.size(); ++i) {
    out.bags.push_back(pd.bags[i]);
    if (i + 1 < pd.bags.size() && rng.coin(slack)) {
      std::vector<int> common;
      std::set_intersection(pd.bags[i].begin(), pd.bags[i].end(), pd.bags[i + 1].begin(), pd.bags[i + 1].end(),
                            std::back_inserter(common));
      for (int rep = rng.range(1, 2); rep > 0; --rep) out.bags.push_back(common);
    }
  }
  return out;
}

CellularAutomaton random_ca(Rng& rng, const Json& p) {
  CellularAutomaton ca;
  ca.num_states = rng.range(3, std::max(3, p.value("states_max", 4)));
  ca.left = 0;
  ca.right = 1;
  const int q = rng.range(p.value("q_min", 2), p.value("q_max", 4));
  auto interior = [&] { return rng.range(2, ca.num_states - 1); };
  ca.initial.push_back(0);
  for (int i = 1; i + 1 < q; ++i) ca.initial.push_back(interior());
  ca.initial.push_back(1);
  const int count = rng.range(p.value("transitions_min", 0), p.value("transitions_max", 6));
  std::set<std::array<int, 4>> tr;
  for (int i = 0; i < count; ++i) {
    int x = rng.coin(0.3) ? 0 : interior();
    int y = rng.coin(0.3) ? 1 : interior();
    tr.insert({x, interior(), y, interior()});
  }
  ca.transitions.assign(tr.begin(), tr.end());
  for (int s = 2; s < ca.num_states; ++s)
    if (rng.coin(p.value("accept_prob", 0.4))) ca.accepting.push_back(s);
  ca.t = rng.range(p.value("t_min", 1), p.value("t_max", 3));
  const std::string acc = p.value("acceptance", "one");
  ca.acceptance = acc == "all" ? Acceptance::AllAccepting
                  : acc == "non-halting" ? Acceptance::NonHalting
                                         : Acceptance::OneAccepting;
  return ca;
}

Clause random_clause(Rng& rng, int vars, int max_len, bool positive, double neg) {
  int len = rng.range(1, std::min(max_len, vars));
  std::vector<int> pick(vars);
  for (int i = 0; i < vars; ++i) pick[i] = i + 1;
  rng.shuffle(pick);
  Clause c;
  for (int i = 0; i < len; ++i) c.push_back(!positive && rng.coin(neg) ? -pick[i] : pick[i]);
  std::sort(c.begin(), c.end());
  return c;
}

ChainedCnf random_cnf(Rng& rng, const Json& p) {
  ChainedCnf c;
  c.r = rng.range(p.value("r_min", 1), p.value("r_max", 3));
  c.positive = p.value("positive", false);
  c.regular = p.value("regular", true);
  const bool partitioned = p.value("partitioned", true);
  if (partitioned) {
    c.k = rng.range(p.value("k_min", 1), p.value("k_max", 2));
    for (int g = 0; g < c.k; ++g) {
      int size = rng.range(p.value("group_min", 1), p.value("group_max", 2));
      std::vector<int> grp;
      for (int i = 0; i < size; ++i) grp.push_back(c.q++);
      c.partition.push_back(grp);
    }
  } else {
    c.q = rng.range(p.value("q_min", 1), p.value("q_max", 3));
    c.k = rng.range(0, std::min(c.q, p.value("k_max", 2)));
  }
  const int max_clauses = p.value("clauses_max", 3), max_len = p.value("literals_max", 3);
  const double neg = p.value("neg_prob", 0.3);
  auto formula = [&](int vars, int most) {
    Cnf f;
    int count = rng.range(0, most);
    for (int i = 0; i < count; ++i) f.push_back(random_clause(rng, vars, max_len, c.positive, neg));
    return f;
  };
  Cnf tmpl = formula(2 * c.q, max_clauses);
  for (int i = 0; i + 1 < c.r; ++i) c.junctions.push_back(c.regular ? tmpl : formula(2 * c.q, max_clauses));
  if (p.value("boundary", false)) {
    c.first = formula(c.q, p.value("boundary_max", 2));
    c.last = formula(c.q, p.value("boundary_max", 2));
  }
  return c;
}

LayeredGraph random_layered(Rng& rng, const Json& p) {
  LayeredGraph g;
  g.r = rng.range(p.value("r_min", 1), p.value("r_max", 3));
  g.k = rng.range(p.value("k_min", 1), p.value("k_max", 2));
  g.variant = p.value("variant", "clique") == "clique" ? ChainedVariant::Clique : ChainedVariant::IndependentSet;
  for (int j = 1; j <= g.r; ++j)
    for (int i = 1; i <= g.k; ++i) {
      int count = rng.range(p.value("per_class_min", 1), p.value("per_class_max", 2));
      for (int c = 0; c < count; ++c) {
        g.layer.push_back(j);
        g.color.push_back(i);
      }
    }
  const int n = static_cast<int>(g.layer.size());
  const double density = p.value("density", 0.6);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::abs(g.layer[u] - g.layer[v]) > 1) continue;
      if (g.layer[u] == g.layer[v] && g.color[u] == g.color[v] && !p.value("same_class_edges", false)) continue;
      if (rng.coin(density)) e.push_back({u, v});
    }
  g.graph = make_graph(n, e);
  return g;
}

Nnccm random_nnccm(Rng& rng, const Json& p) {
  Nnccm m;
  m.k = rng.range(p.value("k_min", 1), p.value("k_max", 2));
  m.n = rng.range(p.value("n_min", 1), p.value("n_max", 2));
  int r = rng.range(p.value("r_min", 0), p.value("r_max", 3));
  for (int i = 0; i < r; ++i)
    m.checks.push_back({rng.range(1, m.k), rng.range(1, m.k), rng.range(0, m.n), rng.range(0, m.n)});
  return m;
}

ListColoringInstance random_list_coloring(Rng& rng, const Json& p) {
  ListColoringInstance l;
  int n = rng.range(p.value("n_min", 1), p.value("n_max", 5));
  l.graph = random_graph(rng, n, p.value("density", 0.5));
  l.pd = random_pd(rng, l.graph, p.value("slack", 0.0));
  const int colors = p.value("colors", 3);
  for (int v = 0; v < n; ++v) {
    std::vector<int> list;
    for (int c = 1; c <= colors; ++c)
      if (rng.coin(p.value("list_prob", 0.5))) list.push_back(c);
    if (list.empty() && rng.coin(0.8)) list.push_back(rng.range(1, colors));
    l.lists.push_back(list);
  }
  const double pre = p.value("precolor_prob", 0.0);
  if (pre > 0) {
    l.precolored.assign(n, -1);
    for (int v = 0; v < n; ++v)
      if (!l.lists[v].empty() && rng.coin(pre))
        l.precolored[v] = l.lists[v][rng.range(0, static_cast<int>(l.lists[v].size()) - 1)];
  }
  return l;
}

PathwidthVertexInstance random_pathwidth(Rng& rng, const Json& p) {
  PathwidthVertexInstance inst;
  int n = rng.range(p.value("n_min", 1), p.value("n_max", 6));
  inst.graph = random_graph(rng, n, p.value("density", 0.5));
  inst.pd = random_pd(rng, inst.graph, p.value("slack", 0.0));
  const std::string prob = p.value("problem", "dominating-set");
  inst.problem = prob == "clique"            ? VertexProblem::Clique
                 : prob == "independent-set" ? VertexProblem::IndependentSet
                                             : VertexProblem::DominatingSet;
  inst.K = rng.range(p.value("K_min", 0), std::min(n, p.value("K_max", n)));
  return inst;
}

SchedulingInstance random_scheduling(Rng& rng, const Json& p) {
  SchedulingInstance s;
  s.num_tasks = rng.range(p.value("tasks_min", 0), p.value("tasks_max", 7));
  auto order = random_order(rng, s.num_tasks);
  const double density = p.value("density", 0.3);
  for (int i = 0; i < s.num_tasks; ++i)
    for (int j = i + 1; j < s.num_tasks; ++j)
      if (rng.coin(density)) s.prec.push_back({order[i], order[j]});
  s.machines = rng.range(1, p.value("machines_max", 3));
  s.deadline = rng.range(1, p.value("deadline_max", 5));
  return s;
}

UniformEmulationInstance random_emulation(Rng& rng, const Json& p) {
  UniformEmulationInstance u;
  u.m = rng.range(1, p.value("m_max", 4));
  u.c = rng.range(1, p.value("c_max", 6));
  int n = rng.range(1, p.value("n_max", 8));
  const int top = std::min(u.c, p.value("weight_max", 4));
  for (int i = 0; i < n; ++i) u.weights.push_back(rng.range(1, top));
  if (rng.coin(p.value("balanced_prob", 0.5))) {
    // Stretch or trim the path until the total weight is exactly c*m.
    long long target = static_cast<long long>(u.c) * u.m, sum = 0;
    std::vector<int> w;
    for (int x : u.weights) {
      if (sum + x > target) break;
      w.push_back(x);
      sum += x;
    }
    while (sum < target) {
      int x = static_cast<int>(std::min<long long>(target - sum, rng.range(1, top)));
      w.push_back(x);
      sum += x;
    }
    u.weights = w;
  }
  return u;
}

BandwidthInstance random_bandwidth(Rng& rng, const Json& p) {
  BandwidthInstance b;
  if (p.value("caterpillar", false)) {
    int spine = rng.range(1, p.value("spine_max", 4));
    int n_max = p.value("n_max", 9), hair = p.value("hair_max", 3);
    std::vector<std::pair<int, int>> e;
    int n = spine;
    for (int i = 0; i + 1 < spine; ++i) e.push_back({i, i + 1});
    for (int i = 0; i < spine && n < n_max; ++i) {
      int hairs = rng.range(0, 2);
      for (int h = 0; h < hairs && n < n_max; ++h) {
        int len = rng.range(1, hair), prev = i;
        for (int s = 0; s < len && n < n_max; ++s) {
          e.push_back({prev, n});
          prev = n++;
        }
      }
    }
    b.graph = make_graph(n, e);
  } else {
    b.graph = random_graph(rng, rng.range(p.value("n_min", 1), p.value("n_max", 7)), p.value("density", 0.4));
  }
  b.k = rng.range(p.value("k_min", 0), p.value("k_max", 3));
  return b;
}

ReconfigurationInstance random_reconfiguration(Rng& rng, const Json& p) {
  const std::string kind = p.value("kind", "dominating-set"), rule = p.value("rule", "TJ");
  ReconfigurationInstance inst;
  inst.kind = kind == "clique"            ? SetKind::Clique
              : kind == "independent-set" ? SetKind::IndependentSet
                                          : SetKind::DominatingSet;
  inst.rule = rule == "TS" ? MoveRule::TokenSliding : MoveRule::TokenJumping;
  for (int attempt = 0;; ++attempt) {
    int n = rng.range(p.value("n_min", 2), p.value("n_max", 6));
    inst.graph = random_graph(rng, n, p.value("density", 0.5));
    inst.tokens = rng.range(1, std::min(n, p.value("tokens_max", 3)));
    std::vector<std::vector<int>> found;
    for (int tries = 0; tries < 40 && found.size() < 2; ++tries) {
      auto o = random_order(rng, n);
      std::vector<int> s(o.begin(), o.begin() + inst.tokens);
      std::sort(s.begin(), s.end());
      if (satisfies_kind(inst.graph, inst.kind, s)) found.push_back(s);
    }
    if (found.size() == 2 || (attempt > 50 && !found.empty())) {
      inst.start = found.front();
      inst.target = found.back();
      break;
    }
  }
  inst.T = rng.range(1, p.value("T_max", 5));
  inst.exact = rng.coin(p.value("exact_prob", 0.5));
  return inst;
}

DfaCollection random_dfas(Rng& rng, const Json& p) {
  DfaCollection d;
  d.alphabet = rng.range(p.value("alphabet_min", 1), p.value("alphabet_max", 3));
  d.acyclic = p.value("acyclic", false);
  int count = rng.range(1, p.value("automata_max", 3));
  for (int a = 0; a < count; ++a) {
    Dfa m;
    m.states = rng.range(1, p.value("states_max", 4));
    for (int s = 0; s < m.states; ++s)
      for (int x = 0; x < d.alphabet; ++x)
        m.delta.push_back(d.acyclic ? rng.range(s, m.states - 1) : rng.range(0, m.states - 1));
    for (int s = 0; s < m.states; ++s)
      if (rng.coin(p.value("accept_prob", 0.4))) m.accepting.push_back(s);
    d.automata.push_back(m);
  }
  return d;
}

LcsInstance random_lcs(Rng& rng, const Json& p) {
  LcsInstance l;
  const std::string alphabet = p.value("alphabet", "ab");
  int count = rng.range(p.value("strings_min", 1), p.value("strings_max", 3));
  for (int i = 0; i < count; ++i) {
    int len = rng.range(p.value("length_min", 0), p.value("length_max", 4));
    std::string s;
    for (int j = 0; j < len; ++j) s += alphabet[rng.range(0, static_cast<int>(alphabet.size()) - 1)];
    l.strings.push_back(s);
  }
  l.m = rng.range(p.value("m_min", 0), p.value("m_max", 4));
  return l;
}

}  // namespace

Instance random_instance(const std::string& kind, std::uint64_t seed, const Json& params) {
  Rng rng(kind, seed);
  Instance inst;
  if (kind == "cellular-automaton") inst = random_ca(rng, params);
  else if (kind == "chained-cnf") inst = random_cnf(rng, params);
  else if (kind == "chained-clique") inst = random_layered(rng, params);
  else if (kind == "chained-independent-set") {
    Json q = params;
    q["variant"] = "independent-set";
    inst = random_layered(rng, q);
  } else if (kind == "nnccm") inst = random_nnccm(rng, params);
  else if (kind == "list-coloring") inst = random_list_coloring(rng, params);
  else if (kind == "pathwidth-vertex") inst = random_pathwidth(rng, params);
  else if (kind == "scheduling") inst = random_scheduling(rng, params);
  else if (kind == "uniform-emulation") inst = random_emulation(rng, params);
  else if (kind == "bandwidth") inst = random_bandwidth(rng, params);
  else if (kind == "reconfiguration") inst = random_reconfiguration(rng, params);
  else if (kind == "fsa-intersection") inst = random_dfas(rng, params);
  else if (kind == "lcs") inst = random_lcs(rng, params);
  else throw UsageError("no generator for kind '" + kind + "'");
  auto diags = validate(inst);
  if (!diags.empty()) throw std::logic_error("generator produced an invalid " + kind + ": " + diags.front());
  return inst;
}

namespace {

void guard(std::size_t count, std::size_t limit) {
  if (count > limit) throw ResourceError("enumeration exceeds " + std::to_string(limit) + " instances");
}

// All subsets of `items` with at most `most` elements, by size then lexicographically.
template <class T>
std::vector<std::vector<T>> subsets(const std::vector<T>& items, int most, std::size_t limit) {
  std::vector<std::vector<T>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int size = 1; size <= most; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier)
      for (int i = s.empty() ? 0 : s.back() + 1; i < static_cast<int>(items.size()); ++i) {
        auto t = s;
        t.push_back(i);
        next.push_back(t);
        std::vector<T> v;
        for (int x : t) v.push_back(items[x]);
        out.push_back(v);
        guard(out.size(), limit);
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Instance> enumerate_instances(const std::string& kind, const Json& b, std::size_t limit) {
  std::vector<Instance> out;
  if (kind == "bandwidth") {
    const int n = b.value("n", 3), k = b.value("k", 1);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    guard(pairs.size() >= 63 ? limit + 1 : (std::size_t{1} << pairs.size()), limit);
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> e;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) e.push_back(pairs[i]);
      out.push_back(BandwidthInstance{make_graph(n, e), k});
    }
  } else if (kind == "nnccm") {
    const int k = b.value("k", 1), n = b.value("n", 1), r = b.value("r", 1);
    std::vector<Check> checks;
    for (int c1 = 1; c1 <= k; ++c1)
      for (int c2 = 1; c2 <= k; ++c2)
        for (int r1 = 0; r1 <= n; ++r1)
          for (int r2 = 0; r2 <= n; ++r2) checks.push_back({c1, c2, r1, r2});
    std::vector<std::vector<Check>> level{{}};
    out.push_back(Nnccm{k, n, {}});
    for (int len = 1; len <= r; ++len) {
      std::vector<std::vector<Check>> next;
      for (const auto& seq : level)
        for (const auto& c : checks) {
          auto s = seq;
          s.push_back(c);
          next.push_back(s);
          out.push_back(Nnccm{k, n, s});
          guard(out.size(), limit);
        }
      level = std::move(next);
    }
  } else if (kind == "chained-cnf") {
    const int r = b.value("r", 2), q = b.value("q", 2), k = b.value("k", 1);
    const int most = b.value("clauses", 1), len = b.value("literals", 2);
    std::vector<int> lits;
    for (int v = 1; v <= 2 * q; ++v) {
      lits.push_back(-v);
      lits.push_back(v);
    }
    std::vector<Clause> clauses;
    for (auto& c : subsets(lits, len, limit)) {
      if (c.empty()) continue;
      bool clash = false;
      for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] == -c[i + 1]) clash = true;
      if (clash) continue;
      std::sort(c.begin(), c.end());
      clauses.push_back(c);
    }
    std::vector<std::vector<int>> partition;
    if (b.contains("partition")) partition = b["partition"].get<std::vector<std::vector<int>>>();
    for (const auto& f : subsets(clauses, most, limit)) {
      ChainedCnf c;
      c.r = r;
      c.q = q;
      c.k = k;
      c.regular = true;
      c.partition = partition;
      c.junctions.assign(std::max(r - 1, 0), f);
      out.push_back(c);
      guard(out.size(), limit);
    }
  } else if (kind == "lcs") {
    const int count = b.value("strings", 2), length = b.value("length", 2), m = b.value("m", 1);
    const std::string alphabet = b.value("alphabet", "ab");
    std::vector<std::string> words{""};
    for (size_t i = 0; i < words.size(); ++i)
      if (static_cast<int>(words[i].size()) < length)
        for (char ch : alphabet) words.push_back(words[i] + ch);
    std::vector<std::vector<std::string>> tuples{{}};
    for (int s = 0; s < count; ++s) {
      std::vector<std::vector<std::string>> next;
      for (const auto& t : tuples)
        for (const auto& w : words) {
          auto u = t;
          u.push_back(w);
          next.push_back(u);
          guard(next.size(), limit);
        }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) out.push_back(LcsInstance{t, m});
  } else {
    throw UsageError("no enumerator for kind '" + kind + "'");
  }
  return out;
}

}  // namespace xnlp
