#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "xnlp/solvers.hpp"

namespace xnlp {

namespace {

bool member(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

Answer solve_list_coloring(const ListColoringInstance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const int n = inst.graph.n;
  auto lists = effective_lists(inst);
  auto mat = adjacency_matrix(inst.graph);

  if (mode == SolveMode::Exhaustive) {
    std::vector<int> col(n, -1);
    std::function<bool(int)> rec = [&](int v) {
      b.charge();
      if (v == n) return true;
      for (int c : lists[v]) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(mat[u][v] && col[u] == c);
        if (!ok) continue;
        col[v] = c;
        if (rec(v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = col;
    }
    return ans;
  }

  // Table per bag: colorings of the bag (aligned with bag order) and the
  // index of a compatible coloring of the previous bag.
  const auto& bags = inst.pd.bags;
  std::vector<std::vector<std::vector<int>>> states(bags.size());
  std::vector<std::vector<int>> parent(bags.size());
  for (size_t i = 0; i < bags.size(); ++i) {
    const auto& bag = bags[i];
    std::map<std::vector<int>, int> seen;
    auto extend_from = [&](const std::vector<int>& fixed, int from) {
      std::vector<int> col = fixed;
      std::function<void(size_t)> rec = [&](size_t pos) {
        b.charge();
        if (pos == bag.size()) {
          if (seen.emplace(col, from).second) {
            states[i].push_back(col);
            parent[i].push_back(from);
          }
          return;
        }
        if (col[pos] >= 0) {
          rec(pos + 1);
          return;
        }
        int v = bag[pos];
        for (int c : lists[v]) {
          bool ok = true;
          for (size_t p = 0; p < bag.size() && ok; ++p)
            ok = !(col[p] == c && p != pos && mat[bag[p]][v]);
          if (!ok) continue;
          col[pos] = c;
          rec(pos + 1);
        }
        col[pos] = -1;
      };
      rec(0);
    };
    if (i == 0) {
      extend_from(std::vector<int>(bag.size(), -1), -1);
    } else {
      const auto& prev = bags[i - 1];
      for (size_t s = 0; s < states[i - 1].size(); ++s) {
        std::vector<int> fixed(bag.size(), -1);
        for (size_t p = 0; p < bag.size(); ++p) {
          auto it = std::lower_bound(prev.begin(), prev.end(), bag[p]);
          if (it != prev.end() && *it == bag[p]) fixed[p] = states[i - 1][s][it - prev.begin()];
        }
        extend_from(fixed, static_cast<int>(s));
      }
    }
    if (states[i].empty()) return ans;
  }
  std::vector<int> col(n, -1);
  int idx = 0;
  for (int i = static_cast<int>(bags.size()) - 1; i >= 0; --i) {
    for (size_t p = 0; p < bags[i].size(); ++p) col[bags[i][p]] = states[i][idx][p];
    idx = parent[i][idx];
  }
  ans.decision = true;
  ans.certificate = col;
  return ans;
}

namespace {

// Introduce/forget sweep over a path decomposition. The state holds one small
// label per vertex of the working set; entries keep the best objective value
// and a back link so a witness set can be recovered.
struct SweepEntry {
  std::vector<std::uint8_t> key;
  int value;
  int parent;
  bool chosen;  // introduced vertex was put into the set
};

struct SweepLayer {
  int vertex;      // vertex introduced or forgotten at this event
  bool introduce;  // false for a forget event
  std::vector<SweepEntry> entries;
};

enum : std::uint8_t { kOut = 0, kDominated = 1, kIn = 2 };

Answer sweep_vertex_problem(const PathwidthVertexInstance& inst, Budget& b) {
  Answer ans;
  const bool ds = inst.problem == VertexProblem::DominatingSet;
  auto mat = adjacency_matrix(inst.graph);
  auto better = [&](int a, int c) { return ds ? a < c : a > c; };

  std::vector<std::pair<int, bool>> events;  // (vertex, introduce)
  std::vector<int> prev;
  for (const auto& bag : inst.pd.bags) {
    for (int v : prev)
      if (!member(bag, v)) events.push_back({v, false});
    for (int v : bag)
      if (!member(prev, v)) events.push_back({v, true});
    prev = bag;
  }
  for (int v : prev) events.push_back({v, false});

  std::vector<SweepLayer> layers;
  std::vector<int> work;  // vertices of the working set in key order
  std::vector<SweepEntry> cur{{{}, 0, -1, false}};
  for (auto [v, intro] : events) {
    SweepLayer layer{v, intro, {}};
    std::map<std::vector<std::uint8_t>, int> where;
    auto offer = [&](std::vector<std::uint8_t> key, int value, int parent, bool chosen) {
      b.charge(key.size() + 1);
      auto [it, fresh] = where.emplace(key, static_cast<int>(layer.entries.size()));
      if (fresh)
        layer.entries.push_back({std::move(key), value, parent, chosen});
      else if (better(value, layer.entries[it->second].value))
        layer.entries[it->second] = {std::move(key), value, parent, chosen};
    };
    if (intro) {
      for (size_t e = 0; e < cur.size(); ++e) {
        const auto& key = cur[e].key;
        bool in_neighbor = false;
        for (size_t p = 0; p < work.size(); ++p)
          if (mat[work[p]][v] && key[p] == kIn) in_neighbor = true;
        if (ds) {
          auto take = key;
          for (size_t p = 0; p < work.size(); ++p)
            if (mat[work[p]][v] && take[p] == kOut) take[p] = kDominated;
          take.push_back(kIn);
          offer(std::move(take), cur[e].value + 1, static_cast<int>(e), true);
          auto skip = key;
          skip.push_back(in_neighbor ? kDominated : kOut);
          offer(std::move(skip), cur[e].value, static_cast<int>(e), false);
        } else {
          if (!in_neighbor) {
            auto take = key;
            take.push_back(kIn);
            offer(std::move(take), cur[e].value + 1, static_cast<int>(e), true);
          }
          auto skip = key;
          skip.push_back(kOut);
          offer(std::move(skip), cur[e].value, static_cast<int>(e), false);
        }
      }
      work.push_back(v);
    } else {
      size_t pos = std::find(work.begin(), work.end(), v) - work.begin();
      for (size_t e = 0; e < cur.size(); ++e) {
        if (ds && cur[e].key[pos] == kOut) continue;
        auto key = cur[e].key;
        key.erase(key.begin() + static_cast<long>(pos));
        offer(std::move(key), cur[e].value, static_cast<int>(e), false);
      }
      work.erase(work.begin() + static_cast<long>(pos));
    }
    cur = layer.entries;
    layers.push_back(std::move(layer));
    if (cur.empty()) return ans;
  }
  const int best = cur.front().value;
  bool ok = ds ? best <= inst.K : best >= inst.K;
  if (!ok) return ans;
  std::vector<int> chosen;
  int idx = 0;
  for (int l = static_cast<int>(layers.size()) - 1; l >= 0; --l) {
    const auto& entry = layers[l].entries[idx];
    if (entry.chosen) chosen.push_back(layers[l].vertex);
    idx = entry.parent;
  }
  std::sort(chosen.begin(), chosen.end());
  ans.decision = true;
  ans.certificate = chosen;
  return ans;
}

Answer bag_cliques(const PathwidthVertexInstance& inst, Budget& b) {
  Answer ans;
  auto mat = adjacency_matrix(inst.graph);
  if (inst.K <= 0) {
    ans.decision = true;
    ans.certificate = std::vector<int>{};
    return ans;
  }
  for (const auto& bag : inst.pd.bags) {
    std::vector<int> pick;
    std::function<bool(size_t)> rec = [&](size_t from) {
      b.charge();
      if (static_cast<int>(pick.size()) == inst.K) return true;
      if (static_cast<int>(pick.size() + bag.size() - from) < inst.K) return false;
      for (size_t i = from; i < bag.size(); ++i) {
        bool ok = true;
        for (int u : pick) ok = ok && mat[u][bag[i]];
        if (!ok) continue;
        pick.push_back(bag[i]);
        if (rec(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = pick;
      return ans;
    }
  }
  return ans;
}

}  // namespace

Answer solve_pathwidth_vertex_problem(const PathwidthVertexInstance& inst, SolveMode mode,
                                      std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const int n = inst.graph.n;
  if (mode == SolveMode::Exhaustive) {
    // Supersets of dominating sets dominate; subsets of cliques and
    // independent sets keep the property. One size suffices.
    int size = inst.problem == VertexProblem::DominatingSet ? std::min(inst.K, n) : inst.K;
    if (size > n) return ans;
    b.require(binomial(n, size) * (size + 1), "subset enumeration");
    auto adj = adjacency_lists(inst.graph);
    auto mat = adjacency_matrix(inst.graph);
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int from) {
      b.charge();
      if (static_cast<int>(pick.size()) == size) {
        b.charge(size + 1);
        switch (inst.problem) {
          case VertexProblem::DominatingSet: return is_dominating(adj, pick);
          case VertexProblem::IndependentSet: return is_independent(mat, pick);
          case VertexProblem::Clique: return is_clique(mat, pick);
        }
        return false;
      }
      for (int v = from; v < n; ++v) {
        pick.push_back(v);
        if (rec(v + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = pick;
    }
    return ans;
  }
  if (inst.problem == VertexProblem::Clique) return bag_cliques(inst, b);
  return sweep_vertex_problem(inst, b);
}

namespace {

// Layout search for one connected component: vertices are placed left to
// right; the last k placed vertices form the window. A vertex may only leave
// the window once all its neighbours are placed.
bool layout_component(const std::vector<int>& comp, const std::vector<std::vector<int>>& adj, int k,
                      Budget& b, std::vector<int>& order) {
  const int c = static_cast<int>(comp.size());
  if (c > 64) throw ResourceError("component with more than 64 vertices");
  std::map<int, int> local;
  for (int i = 0; i < c; ++i) local[comp[i]] = i;
  std::vector<std::uint64_t> nbr(c, 0);
  for (int i = 0; i < c; ++i)
    for (int u : adj[comp[i]]) nbr[i] |= std::uint64_t{1} << local[u];
  std::set<std::pair<std::uint64_t, std::vector<int>>> failed;
  std::vector<int> window, placed_order;
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t placed) {
    b.charge();
    if (static_cast<int>(placed_order.size()) == c) return true;
    if (failed.count({placed, window})) return false;
    std::uint64_t in_window = 0;
    for (int w : window) in_window |= std::uint64_t{1} << w;
    for (int v = 0; v < c; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (placed & bit) continue;
      if ((nbr[v] & placed) & ~in_window) continue;
      std::uint64_t now = placed | bit;
      auto saved = window;
      window.push_back(v);
      bool ok = true;
      while (static_cast<int>(window.size()) > k) {
        int out = window.front();
        window.erase(window.begin());
        if (nbr[out] & ~now) {
          ok = false;
          break;
        }
      }
      if (ok) {
        placed_order.push_back(v);
        if (rec(now)) return true;
        placed_order.pop_back();
      }
      window = saved;
    }
    failed.insert({placed, window});
    return false;
  };
  if (!rec(0)) return false;
  for (int v : placed_order) order.push_back(comp[v]);
  return true;
}

}  // namespace

Answer solve_bandwidth(const BandwidthInstance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const int n = inst.graph.n;
  if (mode == SolveMode::Exhaustive) {
    b.require(std::tgamma(n + 1.0), "permutation enumeration");
    std::vector<int> order(n), pos(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
      b.charge(inst.graph.edges.size() + 1);
      for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
      bool ok = true;
      for (auto [u, v] : inst.graph.edges)
        if (std::abs(pos[u] - pos[v]) > inst.k) {
          ok = false;
          break;
        }
      if (ok) {
        ans.decision = true;
        ans.certificate = pos;
        return ans;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return ans;
  }
  auto adj = adjacency_lists(inst.graph);
  std::vector<int> order;
  for (const auto& comp : connected_components(inst.graph))
    if (!layout_component(comp, adj, inst.k, b, order)) return ans;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i + 1;
  ans.decision = true;
  ans.certificate = pos;
  return ans;
}

namespace {

using Set = std::vector<int>;

struct Mover {
  const ReconfigurationInstance& inst;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<char>> mat;

  explicit Mover(const ReconfigurationInstance& i)
      : inst(i), adj(adjacency_lists(i.graph)), mat(adjacency_matrix(i.graph)) {}

  bool feasible(const Set& s) const {
    switch (inst.kind) {
      case SetKind::DominatingSet: return is_dominating(adj, s);
      case SetKind::IndependentSet: return is_independent(mat, s);
      case SetKind::Clique: return is_clique(mat, s);
    }
    return false;
  }

  template <class F>
  void for_each_move(const Set& s, Budget& b, F&& visit) const {
    for (size_t i = 0; i < s.size(); ++i) {
      int u = s[i];
      auto consider = [&](int v) {
        if (member(s, v)) return;
        b.charge(s.size() + 1);
        Set t = s;
        t.erase(t.begin() + static_cast<long>(i));
        t.insert(std::upper_bound(t.begin(), t.end(), v), v);
        if (feasible(t)) visit(t);
      };
      if (inst.rule == MoveRule::TokenSliding)
        for (int v : adj[u]) consider(v);
      else
        for (int v = 0; v < inst.graph.n; ++v) consider(v);
    }
  }
};

}  // namespace

Answer solve_reconfiguration(const ReconfigurationInstance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  Mover mover(inst);
  const int moves = inst.T - 1;

  if (mode == SolveMode::Exhaustive) {
    std::vector<Set> seq{inst.start};
    std::function<bool()> dfs = [&]() {
      b.charge();
      const int done = static_cast<int>(seq.size()) - 1;
      if (seq.back() == inst.target && (!inst.exact || done == moves)) return true;
      if (done == moves) return false;
      bool found = false;
      std::vector<Set> next;
      mover.for_each_move(seq.back(), b, [&](const Set& t) { next.push_back(t); });
      for (const auto& t : next) {
        seq.push_back(t);
        if (dfs()) return true;
        seq.pop_back();
      }
      return found;
    };
    if (dfs()) {
      ans.decision = true;
      ans.certificate = seq;
    }
    return ans;
  }

  auto emit = [&](std::vector<Set> seq) {
    ans.decision = true;
    ans.certificate = seq;
    return ans;
  };
  if (!inst.exact) {
    std::map<Set, Set> parent{{inst.start, {}}};
    std::vector<Set> frontier{inst.start};
    for (int depth = 0; depth <= moves; ++depth) {
      for (const auto& s : frontier)
        if (s == inst.target) {
          std::vector<Set> seq{s};
          while (seq.back() != inst.start) seq.push_back(parent.at(seq.back()));
          std::reverse(seq.begin(), seq.end());
          return emit(seq);
        }
      if (depth == moves) break;
      std::vector<Set> next;
      for (const auto& s : frontier)
        mover.for_each_move(s, b, [&](const Set& t) {
          if (parent.emplace(t, s).second) next.push_back(t);
        });
      if (next.empty()) break;
      frontier = std::move(next);
    }
    return ans;
  }
  // Exactly T sets: layered reachability, revisits allowed.
  std::vector<std::map<Set, Set>> layers(moves + 1);
  layers[0][inst.start] = {};
  for (int depth = 0; depth < moves; ++depth) {
    for (const auto& [s, p] : layers[depth])
      mover.for_each_move(s, b, [&](const Set& t) { layers[depth + 1].emplace(t, s); });
    if (layers[depth + 1].empty()) return ans;
  }
  if (!layers[moves].count(inst.target)) return ans;
  std::vector<Set> seq{inst.target};
  for (int depth = moves; depth > 0; --depth) seq.push_back(layers[depth].at(seq.back()));
  std::reverse(seq.begin(), seq.end());
  return emit(seq);
}

}  // namespace xnlp
