#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "xnlp/solvers.hpp"

namespace xnlp {

namespace {

using Words = std::vector<std::uint64_t>;

bool test(const Words& w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }
void set(Words& w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Longest chain starting at each task, counted in tasks.
std::vector<int> heights(int n, const std::vector<std::vector<int>>& succ, const std::vector<int>& topo) {
  std::vector<int> h(n, 1);
  for (int i = n - 1; i >= 0; --i)
    for (int w : succ[topo[i]]) h[topo[i]] = std::max(h[topo[i]], h[w] + 1);
  return h;
}

std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& succ) {
  std::vector<int> indeg(n, 0), order;
  for (int v = 0; v < n; ++v)
    for (int w : succ[v]) ++indeg[w];
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) order.push_back(v);
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : succ[order[i]])
      if (--indeg[w] == 0) order.push_back(w);
  return order;
}

}  // namespace

Answer solve_scheduling(const SchedulingInstance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const int n = inst.num_tasks;
  std::vector<std::vector<int>> succ(n), pred(n);
  for (auto [a, c] : inst.prec) {
    succ[a].push_back(c);
    pred[c].push_back(a);
  }
  auto topo = topo_order(n, succ);
  auto h = heights(n, succ, topo);
  for (int v = 0; v < n; ++v)
    if (h[v] > inst.deadline) return ans;

  if (mode == SolveMode::Exhaustive) {
    std::vector<int> slot(n, 0), load(inst.deadline + 1, 0);
    std::function<bool(int)> rec = [&](int idx) {
      b.charge();
      if (idx == n) return true;
      int v = topo[idx];
      int lo = 1;
      for (int u : pred[v]) lo = std::max(lo, slot[u] + 1);
      for (int s = lo; s <= inst.deadline - h[v] + 1; ++s) {
        if (load[s] == inst.machines) continue;
        slot[v] = s;
        ++load[s];
        if (rec(idx + 1)) return true;
        --load[s];
      }
      slot[v] = 0;
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = slot;
    }
    return ans;
  }

  // Breadth-first over downsets; a slot runs min(K, #available) tasks.
  const size_t words = (static_cast<size_t>(n) + 63) / 64;
  std::vector<Words> pred_mask(n, Words(words, 0));
  for (int v = 0; v < n; ++v)
    for (int u : pred[v]) set(pred_mask[v], u);
  Words full(words, 0);
  for (int v = 0; v < n; ++v) set(full, v);

  std::vector<std::map<Words, Words>> layers(inst.deadline + 1);
  layers[0][Words(words, 0)] = {};
  for (int t = 0; t < inst.deadline; ++t) {
    if (layers[t].count(full)) break;
    for (const auto& [done, parent] : layers[t]) {
      int left = 0, max_h = 0;
      std::vector<int> avail;
      for (int v = 0; v < n; ++v) {
        if (test(done, v)) continue;
        ++left;
        max_h = std::max(max_h, h[v]);
        bool ready = true;
        for (size_t w = 0; w < words && ready; ++w) ready = (pred_mask[v][w] & ~done[w]) == 0;
        if (ready) avail.push_back(v);
      }
      const int remaining = inst.deadline - t;
      if (max_h > remaining || left > remaining * inst.machines) continue;
      const int take = std::min<int>(inst.machines, static_cast<int>(avail.size()));
      std::vector<int> pick;
      std::function<void(size_t)> choose = [&](size_t from) {
        if (static_cast<int>(pick.size()) == take) {
          b.charge(words + 1);
          Words next = done;
          for (int v : pick) set(next, v);
          layers[t + 1].emplace(std::move(next), done);
          return;
        }
        for (size_t i = from; i + (take - pick.size()) <= avail.size(); ++i) {
          pick.push_back(avail[i]);
          choose(i + 1);
          pick.pop_back();
        }
      };
      choose(0);
    }
  }
  for (int t = 0; t <= inst.deadline; ++t) {
    if (!layers[t].count(full)) continue;
    std::vector<int> slot(n, 0);
    Words cur = full;
    for (int s = t; s > 0; --s) {
      const Words& prev = layers[s].at(cur);
      for (int v = 0; v < n; ++v)
        if (test(cur, v) && !test(prev, v)) slot[v] = s;
      cur = prev;
    }
    ans.decision = true;
    ans.certificate = slot;
    return ans;
  }
  return ans;
}

namespace {

// Visit counts of the walk s -> first -> second -> e on [1,m].
std::vector<int> sweep_counts(int m, int s, int first, int second, int e) {
  std::vector<int> cnt(m + 2, 0), route{s};
  auto go = [&](int to) {
    while (route.back() != to) route.push_back(route.back() + (to > route.back() ? 1 : -1));
  };
  go(first);
  go(second);
  go(e);
  for (int x : route) ++cnt[x];
  return cnt;
}

// A run of unit-weight vertices that must absorb exactly `gap[j]` at every
// target vertex j, starting next to level `prev` (0 = anywhere). Returns the
// levels of the run, or an empty vector if impossible.
std::vector<int> unit_tail(int m, const std::vector<int>& gap, int prev, int length) {
  int a = 0, b = 0;
  for (int j = 1; j <= m; ++j)
    if (gap[j] > 0) {
      if (!a) a = j;
      b = j;
    }
  if (!a) return {};
  for (int j = a; j <= b; ++j)
    if (gap[j] <= 0) return {};
  for (int s = std::max(a, prev ? prev - 1 : a); s <= std::min(b, prev ? prev + 1 : b); ++s)
    for (int e = a; e <= b; ++e)
      for (int order = 0; order < 2; ++order) {
        int first = order ? b : a, second = order ? a : b;
        auto cnt = sweep_counts(m, s, first, second, e);
        bool fits = true;
        for (int j = a; j <= b && fits; ++j) fits = cnt[j] <= gap[j];
        if (!fits) continue;
        std::vector<int> out, route{s};
        auto go = [&](int to) {
          while (route.back() != to) route.push_back(route.back() + (to > route.back() ? 1 : -1));
        };
        go(first);
        go(second);
        go(e);
        std::vector<int> extra(m + 1, 0);
        for (int j = a; j <= b; ++j) extra[j] = gap[j] - cnt[j];
        for (int x : route) {
          out.push_back(x);
          for (; extra[x] > 0; --extra[x]) out.push_back(x);
        }
        if (static_cast<int>(out.size()) != length) return {};
        return out;
      }
  return {};
}

// Necessary condition: place only the vertices of weight at least two, keeping
// consecutive ones within their index distance and charging one unit to every
// position a connecting run of unit vertices must cross.
bool heavy_placement_exists(const UniformEmulationInstance& inst, Budget& b) {
  const int m = inst.m;
  std::vector<int> heavy;
  for (int i = 0; i < static_cast<int>(inst.weights.size()); ++i)
    if (inst.weights[i] >= 2) heavy.push_back(i);
  std::vector<int> load(m + 1, 0);
  std::set<std::vector<int>> failed;
  std::function<bool(size_t, int)> rec = [&](size_t t, int prev) {
    b.charge(m + 1);
    if (t == heavy.size()) return true;
    std::vector<int> key(load.begin() + 1, load.end());
    key.push_back(static_cast<int>(t));
    key.push_back(prev);
    if (failed.count(key)) return false;
    const int w = inst.weights[heavy[t]];
    const int reach = t ? heavy[t] - heavy[t - 1] : m;
    const int lo = t ? std::max(1, prev - reach) : 1, hi = t ? std::min(m, prev + reach) : m;
    for (int p = lo; p <= hi; ++p) {
      const int a = t ? std::min(prev, p) + 1 : p, z = t ? std::max(prev, p) - 1 : p - 1;
      bool fits = load[p] + w <= inst.c;
      for (int x = a; x <= z && fits; ++x) fits = load[x] + 1 <= inst.c;
      if (!fits) continue;
      for (int x = a; x <= z; ++x) ++load[x];
      load[p] += w;
      bool ok = rec(t + 1, p);
      load[p] -= w;
      for (int x = a; x <= z; ++x) --load[x];
      if (ok) return true;
    }
    failed.insert(std::move(key));
    return false;
  };
  return rec(0, 0);
}

}  // namespace

Answer solve_uniform_emulation(const UniformEmulationInstance& inst, SolveMode mode,
                               std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const int n = static_cast<int>(inst.weights.size());
  const int m = inst.m;
  const auto& w = inst.weights;
  std::vector<int> f(n, 0), load(m + 1, 0);

  if (mode == SolveMode::Exhaustive) {
    std::function<bool(int)> rec = [&](int i) {
      b.charge();
      if (i == n) {
        for (int j = 1; j <= m; ++j)
          if (load[j] != inst.c) return false;
        return true;
      }
      int lo = i ? std::max(1, f[i - 1] - 1) : 1, hi = i ? std::min(m, f[i - 1] + 1) : m;
      for (int j = lo; j <= hi; ++j) {
        if (load[j] + w[i] > inst.c) continue;
        f[i] = j;
        load[j] += w[i];
        if (rec(i + 1)) return true;
        load[j] -= w[i];
      }
      return false;
    };
    if (rec(0)) {
      ans.decision = true;
      ans.certificate = f;
    }
    return ans;
  }

  long long total = 0;
  for (int x : w) total += x;
  if (total != static_cast<long long>(inst.c) * m) return ans;
  if (!heavy_placement_exists(inst, b)) return ans;

  int tail = n;
  while (tail > 0 && w[tail - 1] == 1) --tail;
  // Ascending-weight lookahead: for each i, the later vertices that are
  // heavier than everything between i and them.
  std::vector<std::vector<int>> records(n);
  for (int i = 0; i < tail; ++i) {
    int best = 0;
    for (int j = i + 1; j < tail; ++j)
      if (w[j] > best) {
        best = w[j];
        records[i].push_back(j);
      }
  }
  std::set<std::vector<int>> failed;
  std::function<bool(int)> rec = [&](int i) {
    b.charge(m + 1);
    if (i == tail) {
      std::vector<int> gap(m + 1, 0);
      for (int j = 1; j <= m; ++j) gap[j] = inst.c - load[j];
      if (tail == n) return true;
      auto run = unit_tail(m, gap, i ? f[i - 1] : 0, n - tail);
      if (run.empty()) return false;
      std::copy(run.begin(), run.end(), f.begin() + tail);
      return true;
    }
    std::vector<int> key(load.begin() + 1, load.end());
    key.push_back(i);
    key.push_back(i ? f[i - 1] : 0);
    if (failed.count(key)) return false;
    int lo = i ? std::max(1, f[i - 1] - 1) : 1, hi = i ? std::min(m, f[i - 1] + 1) : m;
    for (int j = lo; j <= hi; ++j) {
      if (load[j] + w[i] > inst.c) continue;
      load[j] += w[i];
      bool reachable = true;
      for (int r : records[i]) {
        int d = r - i;
        bool room = false;
        for (int x = std::max(1, j - d); x <= std::min(m, j + d) && !room; ++x)
          room = load[x] + w[r] <= inst.c;
        if (!room) {
          reachable = false;
          break;
        }
      }
      f[i] = j;
      if (reachable && rec(i + 1)) return true;
      load[j] -= w[i];
    }
    failed.insert(std::move(key));
    return false;
  };
  if (rec(0)) {
    ans.decision = true;
    ans.certificate = f;
  }
  return ans;
}

}  // namespace xnlp
