#include <algorithm>
#include <cmath>
#include <functional>

#include "xnlp/solvers.hpp"

namespace xnlp {

namespace {

using Assignment = std::vector<char>;

bool clause_holds(const Clause& c, const Assignment& lo, const Assignment& hi, int q) {
  for (int lit : c) {
    int v = std::abs(lit) - 1;
    bool value = v < q ? lo[v] : hi[v - q];
    if ((lit > 0) == value) return true;
  }
  return false;
}

bool all_hold(const Cnf& f, const Assignment& lo, const Assignment& hi, int q) {
  for (const auto& c : f)
    if (!clause_holds(c, lo, hi, q)) return false;
  return true;
}

Json true_lists(const std::vector<Assignment>& blocks) {
  Json out = Json::array();
  for (const auto& a : blocks) {
    std::vector<int> t;
    for (int x = 0; x < static_cast<int>(a.size()); ++x)
      if (a[x]) t.push_back(x);
    out.push_back(t);
  }
  return out;
}

// All block assignments with the right true-count and one true per group.
// Clauses in `local` (over the block alone) prune as soon as their last
// variable is decided.
std::vector<Assignment> block_assignments(const ChainedCnf& c, const Cnf& local, Budget& b) {
  std::vector<int> group_of(c.q, -1), group_last(c.partition.size(), -1);
  for (size_t g = 0; g < c.partition.size(); ++g)
    for (int x : c.partition[g]) {
      group_of[x] = static_cast<int>(g);
      group_last[g] = std::max(group_last[g], x);
    }
  std::vector<std::vector<const Clause*>> due(c.q);
  for (const auto& cl : local) {
    int hi = 0;
    for (int lit : cl) hi = std::max(hi, std::abs(lit) - 1);
    due[hi].push_back(&cl);
  }
  std::vector<int> group_count(c.partition.size(), 0);
  Assignment a(c.q, 0);
  std::vector<Assignment> out;
  std::function<void(int, int)> rec = [&](int x, int on) {
    b.charge();
    if (x == c.q) {
      if (on == c.k) out.push_back(a);
      return;
    }
    for (int value = 1; value >= 0; --value) {
      if (value && on == c.k) continue;
      if (!value && c.q - x - 1 < c.k - on) continue;
      int g = group_of[x];
      if (g >= 0) {
        if (value && group_count[g] == 1) continue;
        if (!value && x == group_last[g] && group_count[g] == 0) continue;
      }
      a[x] = static_cast<char>(value);
      if (g >= 0) group_count[g] += value;
      bool ok = true;
      for (const Clause* cl : due[x])
        if (!clause_holds(*cl, a, a, c.q)) {
          ok = false;
          break;
        }
      if (ok) rec(x + 1, on + value);
      if (g >= 0) group_count[g] -= value;
      a[x] = 0;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

Answer solve_chained_cnf(const ChainedCnf& c, SolveMode mode, std::uint64_t budget) {
  require_valid(c);
  Budget b(budget);
  Answer ans;
  if (mode == SolveMode::Exhaustive) {
    auto cands = block_assignments(c, {}, b);
    if (cands.empty()) return ans;
    b.require(std::pow(static_cast<double>(cands.size()), c.r), "block assignment product");
    std::vector<Assignment> pick(c.r);
    std::function<bool(int)> rec = [&](int i) {
      if (i == c.r) {
        b.charge(1 + c.first.size() + c.last.size());
        if (!all_hold(c.first, pick[0], pick[0], c.q)) return false;
        if (!all_hold(c.last, pick[c.r - 1], pick[c.r - 1], c.q)) return false;
        for (int j = 0; j + 1 < c.r; ++j) {
          b.charge(c.junctions[j].size());
          if (!all_hold(c.junctions[j], pick[j], pick[j + 1], c.q)) return false;
        }
        return true;
      }
      for (const auto& a : cands) {
        pick[i] = a;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = true_lists(pick);
    }
    return ans;
  }

  Cnf first_local = c.first, both = c.first;
  both.insert(both.end(), c.last.begin(), c.last.end());
  std::vector<Assignment> head = block_assignments(c, c.r == 1 ? both : first_local, b);
  if (c.r == 1) {
    if (head.empty()) return ans;
    ans.decision = true;
    ans.certificate = true_lists({head.front()});
    return ans;
  }
  std::vector<Assignment> middle = c.r > 2 ? block_assignments(c, {}, b) : std::vector<Assignment>{};
  std::vector<Assignment> tail = block_assignments(c, c.last, b);
  auto cands_of = [&](int i) -> const std::vector<Assignment>& {
    if (i == 0) return head;
    if (i == c.r - 1) return tail;
    return middle;
  };
  // parent[i][j]: index in block i-1 of a predecessor of candidate j, or -1.
  std::vector<std::vector<int>> parent(c.r);
  parent[0].assign(head.size(), 0);
  for (int i = 1; i < c.r; ++i) {
    const auto& prev = cands_of(i - 1);
    const auto& cur = cands_of(i);
    parent[i].assign(cur.size(), -1);
    for (size_t j = 0; j < cur.size(); ++j)
      for (size_t p = 0; p < prev.size(); ++p) {
        if (parent[i - 1][p] < 0) continue;
        b.charge(1 + c.junctions[i - 1].size());
        if (all_hold(c.junctions[i - 1], prev[p], cur[j], c.q)) {
          parent[i][j] = static_cast<int>(p);
          break;
        }
      }
  }
  for (size_t j = 0; j < tail.size(); ++j) {
    if (parent[c.r - 1][j] < 0) continue;
    std::vector<Assignment> blocks(c.r);
    int idx = static_cast<int>(j);
    for (int i = c.r - 1; i >= 0; --i) {
      blocks[i] = cands_of(i)[idx];
      idx = parent[i][idx];
    }
    ans.decision = true;
    ans.certificate = true_lists(blocks);
    break;
  }
  return ans;
}

namespace {

struct LayerIndex {
  // members[i][c]: vertices of layer i (1-based) with color c (1-based)
  std::vector<std::vector<std::vector<int>>> members;
  bool complete = true;
};

LayerIndex index_layers(const LayeredGraph& g) {
  LayerIndex li;
  li.members.assign(g.r + 1, std::vector<std::vector<int>>(g.k + 1));
  for (int v = 0; v < g.graph.n; ++v) li.members[g.layer[v]][g.color[v]].push_back(v);
  for (int i = 1; i <= g.r; ++i)
    for (int c = 1; c <= g.k; ++c)
      if (li.members[i][c].empty()) li.complete = false;
  return li;
}

bool compatible(const std::vector<std::vector<char>>& mat, bool clique, const std::vector<int>& a,
                const std::vector<int>& b) {
  for (int u : a)
    for (int v : b)
      if (u != v && static_cast<bool>(mat[u][v]) != clique) return false;
  return true;
}

Json selection_json(const std::vector<std::vector<int>>& layers) {
  std::vector<int> w;
  for (const auto& l : layers) w.insert(w.end(), l.begin(), l.end());
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

Answer solve_chained_clique(const LayeredGraph& g, SolveMode mode, std::uint64_t budget) {
  require_valid(g);
  Budget b(budget);
  Answer ans;
  auto li = index_layers(g);
  if (!li.complete) return ans;
  auto mat = adjacency_matrix(g.graph);
  const bool clique = g.variant == ChainedVariant::Clique;

  if (mode == SolveMode::Exhaustive) {
    double space = 1;
    for (int i = 1; i <= g.r; ++i)
      for (int c = 1; c <= g.k; ++c) space *= static_cast<double>(li.members[i][c].size());
    b.require(space, "colorful selection product");
    std::vector<std::vector<int>> pick(g.r + 1, std::vector<int>(g.k));
    std::function<bool(int, int)> rec = [&](int i, int c) {
      if (i > g.r) {
        b.charge(static_cast<std::uint64_t>(g.r) * g.k * g.k);
        for (int j = 1; j <= g.r; ++j) {
          if (!compatible(mat, clique, pick[j], pick[j])) return false;
          if (j < g.r && !compatible(mat, clique, pick[j], pick[j + 1])) return false;
        }
        return true;
      }
      if (c > g.k) return rec(i + 1, 1);
      for (int v : li.members[i][c]) {
        pick[i][c - 1] = v;
        if (rec(i, c + 1)) return true;
      }
      return false;
    };
    if (rec(1, 1)) {
      ans.decision = true;
      pick.erase(pick.begin());
      ans.certificate = selection_json(pick);
    }
    return ans;
  }

  // Per-layer colorful selections that are internally consistent.
  std::vector<std::vector<std::vector<int>>> sel(g.r + 1);
  for (int i = 1; i <= g.r; ++i) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int c) {
      b.charge();
      if (c > g.k) {
        sel[i].push_back(cur);
        return;
      }
      for (int v : li.members[i][c]) {
        bool ok = true;
        for (int u : cur)
          if (static_cast<bool>(mat[u][v]) != clique) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(v);
        rec(c + 1);
        cur.pop_back();
      }
    };
    rec(1);
    if (sel[i].empty()) return ans;
  }
  std::vector<std::vector<int>> parent(g.r + 1);
  parent[1].assign(sel[1].size(), 0);
  for (int i = 2; i <= g.r; ++i) {
    parent[i].assign(sel[i].size(), -1);
    for (size_t j = 0; j < sel[i].size(); ++j)
      for (size_t p = 0; p < sel[i - 1].size(); ++p) {
        if (parent[i - 1][p] < 0) continue;
        b.charge(static_cast<std::uint64_t>(g.k) * g.k);
        if (compatible(mat, clique, sel[i - 1][p], sel[i][j])) {
          parent[i][j] = static_cast<int>(p);
          break;
        }
      }
  }
  for (size_t j = 0; j < sel[g.r].size(); ++j) {
    if (parent[g.r][j] < 0) continue;
    std::vector<std::vector<int>> layers(g.r);
    int idx = static_cast<int>(j);
    for (int i = g.r; i >= 1; --i) {
      layers[i - 1] = sel[i][idx];
      idx = parent[i][idx];
    }
    ans.decision = true;
    ans.certificate = selection_json(layers);
    break;
  }
  return ans;
}

Answer solve_nnccm(const Nnccm& m, SolveMode mode, std::uint64_t budget) {
  require_valid(m);
  Budget b(budget);
  Answer ans;
  const int r = static_cast<int>(m.checks.size());
  auto rejects = [&](const std::vector<int>& v, const Check& ch) {
    return v[ch.c1 - 1] == ch.r1 && v[ch.c2 - 1] == ch.r2;
  };

  if (mode == SolveMode::Exhaustive) {
    std::vector<std::vector<int>> trace;
    std::vector<int> cur(m.k);
    std::function<bool(int, const std::vector<int>&)> step = [&](int i, const std::vector<int>& prev) {
      b.charge();
      if (i == r) return true;
      // Enumerate every vector between prev and (n,...,n).
      std::function<bool(int)> choose = [&](int c) {
        if (c == m.k) {
          b.charge();
          if (rejects(cur, m.checks[i])) return false;
          trace.push_back(cur);
          auto snapshot = cur;
          if (step(i + 1, snapshot)) return true;
          trace.pop_back();
          cur = snapshot;
          return false;
        }
        for (int v = prev[c]; v <= m.n; ++v) {
          cur[c] = v;
          if (choose(c + 1)) return true;
        }
        return false;
      };
      return choose(0);
    };
    if (step(0, std::vector<int>(m.k, 0))) {
      ans.decision = true;
      ans.certificate = trace;
    }
    return ans;
  }

  double cells_d = std::pow(static_cast<double>(m.n + 1), m.k);
  b.require(cells_d * (r + 1) * (m.k + 1), "counter vector table");
  const long long cells = static_cast<long long>(cells_d);
  std::vector<long long> stride(m.k, 1);
  for (int c = 1; c < m.k; ++c) stride[c] = stride[c - 1] * (m.n + 1);
  auto decode = [&](long long id) {
    std::vector<int> v(m.k);
    for (int c = 0; c < m.k; ++c) v[c] = static_cast<int>((id / stride[c]) % (m.n + 1));
    return v;
  };
  // alive[i]: counter vectors reachable having passed checks 1..i.
  std::vector<std::vector<char>> alive(r + 1, std::vector<char>(cells, 0));
  alive[0][0] = 1;
  for (int i = 0; i < r; ++i) {
    std::vector<char> up = alive[i];
    for (int c = 0; c < m.k; ++c)
      for (long long id = 0; id < cells; ++id) {
        b.charge();
        if (up[id] && (id / stride[c]) % (m.n + 1) < m.n) up[id + stride[c]] = 1;
      }
    const auto& ch = m.checks[i];
    bool any = false;
    for (long long id = 0; id < cells; ++id)
      if (up[id]) {
        auto v = decode(id);
        alive[i + 1][id] = !rejects(v, ch);
        any = any || alive[i + 1][id];
      }
    if (!any) return ans;
  }
  std::vector<std::vector<int>> trace(r);
  long long cur = -1;
  for (long long id = 0; id < cells && cur < 0; ++id)
    if (alive[r][id]) cur = id;
  for (int i = r; i >= 1; --i) {
    auto v = decode(cur);
    trace[i - 1] = v;
    for (long long id = 0; id < cells; ++id) {
      if (!alive[i - 1][id]) continue;
      auto u = decode(id);
      bool below = true;
      for (int c = 0; c < m.k; ++c) below = below && u[c] <= v[c];
      if (below) {
        cur = id;
        break;
      }
    }
  }
  ans.decision = true;
  ans.certificate = trace;
  return ans;
}

}  // namespace xnlp
