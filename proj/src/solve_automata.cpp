#include <algorithm>
#include <functional>
#include <map>

#include "xnlp/solvers.hpp"

namespace xnlp {

namespace {

using Config = std::vector<int>;

// Successor states per (left, self, right) neighbourhood.
std::map<std::array<int, 3>, std::vector<int>> transition_index(const CellularAutomaton& ca) {
  std::map<std::array<int, 3>, std::vector<int>> idx;
  for (const auto& z : ca.transitions) idx[{z[0], z[1], z[2]}].push_back(z[3]);
  for (auto& [key, v] : idx) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return idx;
}

void for_each_successor(const CellularAutomaton& ca,
                        const std::map<std::array<int, 3>, std::vector<int>>& idx, const Config& c,
                        const std::function<bool(const Config&)>& visit) {
  const int q = ca.q();
  std::vector<const std::vector<int>*> options(q, nullptr);
  for (int i = 1; i + 1 < q; ++i) {
    auto it = idx.find({c[i - 1], c[i], c[i + 1]});
    if (it == idx.end()) return;
    options[i] = &it->second;
  }
  Config next = c;
  std::function<bool(int)> rec = [&](int i) {
    if (i + 1 >= q) return visit(next);
    for (int s : *options[i]) {
      next[i] = s;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(1);
}

bool accepts(const CellularAutomaton& ca, const Config& c) {
  auto acc = [&](int s) { return std::binary_search(ca.accepting.begin(), ca.accepting.end(), s); };
  switch (ca.acceptance) {
    case Acceptance::OneAccepting: return std::any_of(c.begin(), c.end(), acc);
    case Acceptance::AllAccepting: return std::all_of(c.begin() + 1, c.end() - 1, acc);
    case Acceptance::NonHalting: return true;
  }
  return false;
}

}  // namespace

Answer solve_cellular_automaton(const CellularAutomaton& ca, SolveMode mode, std::uint64_t budget) {
  require_valid(ca);
  Budget b(budget);
  auto idx = transition_index(ca);
  Answer ans;
  if (mode == SolveMode::Exhaustive) {
    std::vector<Config> run{ca.initial};
    std::function<bool(int)> dfs = [&](int step) {
      b.charge();
      if (step == ca.t) return accepts(ca, run.back());
      bool found = false;
      for_each_successor(ca, idx, run.back(), [&](const Config& next) {
        run.push_back(next);
        found = dfs(step + 1);
        if (!found) run.pop_back();
        return found;
      });
      return found;
    };
    if (dfs(0)) {
      ans.decision = true;
      ans.certificate = run;
    }
    return ans;
  }
  // Layered reachability over configurations with parent links.
  std::vector<std::map<Config, Config>> layers(ca.t + 1);
  layers[0][ca.initial] = {};
  for (int step = 0; step < ca.t; ++step)
    for (const auto& [c, parent] : layers[step])
      for_each_successor(ca, idx, c, [&](const Config& next) {
        b.charge();
        layers[step + 1].emplace(next, c);
        return false;
      });
  for (const auto& [c, parent] : layers[ca.t]) {
    if (!accepts(ca, c)) continue;
    std::vector<Config> run{c};
    for (int step = ca.t; step > 0; --step) run.push_back(layers[step].at(run.back()));
    std::reverse(run.begin(), run.end());
    ans.decision = true;
    ans.certificate = run;
    break;
  }
  return ans;
}

namespace {

long long word_length_bound(const DfaCollection& d) {
  if (d.acyclic) {
    long long s = 0;
    for (const auto& m : d.automata) s += m.states - 1;
    return s;
  }
  long double p = 1;
  for (const auto& m : d.automata) p *= m.states;
  return static_cast<long long>(std::min<long double>(p - 1, 1e18L));
}

bool all_accept(const DfaCollection& d, const std::vector<int>& states) {
  for (size_t a = 0; a < d.automata.size(); ++a)
    if (!std::binary_search(d.automata[a].accepting.begin(), d.automata[a].accepting.end(), states[a]))
      return false;
  return true;
}

}  // namespace

Answer solve_fsa_intersection(const DfaCollection& d, SolveMode mode, std::uint64_t budget) {
  require_valid(d);
  Budget b(budget);
  Answer ans;
  const size_t count = d.automata.size();
  std::vector<int> start(count);
  for (size_t a = 0; a < count; ++a) start[a] = d.automata[a].start;
  auto step = [&](const std::vector<int>& s, int x) {
    std::vector<int> t(count);
    for (size_t a = 0; a < count; ++a)
      t[a] = d.automata[a].delta[static_cast<size_t>(s[a]) * d.alphabet + x];
    return t;
  };

  if (mode == SolveMode::Exhaustive) {
    const long long bound = word_length_bound(d);
    std::vector<int> word;
    std::function<bool(const std::vector<int>&)> dfs = [&](const std::vector<int>& s) {
      b.charge(count + 1);
      if (all_accept(d, s)) return true;
      if (static_cast<long long>(word.size()) >= bound) return false;
      for (int x = 0; x < d.alphabet; ++x) {
        word.push_back(x);
        if (dfs(step(s, x))) return true;
        word.pop_back();
      }
      return false;
    };
    if (dfs(start)) {
      ans.decision = true;
      ans.certificate = word;
    }
    return ans;
  }

  std::map<std::vector<int>, std::pair<std::vector<int>, int>> parent;
  std::vector<std::vector<int>> queue{start};
  parent[start] = {{}, -1};
  for (size_t head = 0; head < queue.size(); ++head) {
    const auto s = queue[head];
    if (all_accept(d, s)) {
      std::vector<int> word;
      for (auto cur = s; parent[cur].second >= 0;) {
        auto [prev, x] = parent[cur];
        word.push_back(x);
        cur = prev;
      }
      std::reverse(word.begin(), word.end());
      ans.decision = true;
      ans.certificate = word;
      return ans;
    }
    for (int x = 0; x < d.alphabet; ++x) {
      b.charge(count + 1);
      auto t = step(s, x);
      if (parent.emplace(t, std::make_pair(s, x)).second) queue.push_back(t);
    }
  }
  return ans;
}

Answer solve_lcs(const LcsInstance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  Budget b(budget);
  Answer ans;
  const auto& ss = inst.strings;
  const int k = static_cast<int>(ss.size());
  if (mode == SolveMode::Exhaustive) {
    auto shortest = *std::min_element(ss.begin(), ss.end(),
                                      [](const auto& x, const auto& y) { return x.size() < y.size(); });
    if (static_cast<int>(shortest.size()) < inst.m) return ans;
    std::string pick;
    std::function<bool(size_t)> rec = [&](size_t from) {
      b.charge();
      if (static_cast<int>(pick.size()) == inst.m) {
        b.charge(k);
        for (const auto& t : ss) {
          size_t i = 0;
          for (char ch : t)
            if (i < pick.size() && pick[i] == ch) ++i;
          if (i != pick.size()) return false;
        }
        return true;
      }
      for (size_t i = from; i < shortest.size(); ++i) {
        pick.push_back(shortest[i]);
        if (rec(i + 1)) return true;
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
  // Suffix DP over index tuples, flattened in mixed radix.
  std::vector<long long> stride(k + 1, 1);
  for (int i = 0; i < k; ++i) {
    stride[i + 1] = stride[i] * static_cast<long long>(ss[i].size() + 1);
    b.require(static_cast<double>(stride[i + 1]) * k, "LCS table");
  }
  const long long cells = stride[k];
  std::vector<int> best(cells, 0);
  std::vector<int> pos(k);
  for (long long id = cells - 1; id >= 0; --id) {
    b.charge(k);
    bool at_end = false;
    for (int i = 0; i < k; ++i) {
      pos[i] = static_cast<int>((id / stride[i]) % static_cast<long long>(ss[i].size() + 1));
      if (pos[i] == static_cast<int>(ss[i].size())) at_end = true;
    }
    if (at_end) continue;
    bool same = true;
    for (int i = 1; i < k && same; ++i) same = ss[i][pos[i]] == ss[0][pos[0]];
    if (same) {
      long long nxt = id;
      for (int i = 0; i < k; ++i) nxt += stride[i];
      best[id] = 1 + best[nxt];
    } else {
      int m = 0;
      for (int i = 0; i < k; ++i) m = std::max(m, best[id + stride[i]]);
      best[id] = m;
    }
  }
  if (best[0] < inst.m) return ans;
  std::string out;
  long long id = 0;
  while (best[id] > 0) {
    for (int i = 0; i < k; ++i)
      pos[i] = static_cast<int>((id / stride[i]) % static_cast<long long>(ss[i].size() + 1));
    bool same = true;
    for (int i = 1; i < k && same; ++i) same = ss[i][pos[i]] == ss[0][pos[0]];
    if (same) {
      out.push_back(ss[0][pos[0]]);
      for (int i = 0; i < k; ++i) id += stride[i];
      continue;
    }
    for (int i = 0; i < k; ++i)
      if (best[id + stride[i]] == best[id]) {
        id += stride[i];
        break;
      }
  }
  ans.decision = true;
  ans.certificate = out;
  return ans;
}

}  // namespace xnlp
