#include <algorithm>
#include <map>
#include <set>

#include "xnlp/solvers.hpp"

namespace xnlp {

Json answer_to_json(const Answer& a) {
  Json j;
  j["decision"] = a.decision;
  j["certificate"] = a.decision ? a.certificate : Json(nullptr);
  return j;
}

namespace {

bool satisfied(const Clause& c, const std::vector<char>& lo, const std::vector<char>& hi, int q) {
  for (int lit : c) {
    int v = std::abs(lit) - 1;
    bool value = v < q ? lo[v] : hi[v - q];
    if ((lit > 0) == value) return true;
  }
  return false;
}

bool check(const CellularAutomaton& ca, const Json& cert) {
  auto run = cert.get<std::vector<std::vector<int>>>();
  const int q = ca.q();
  if (static_cast<int>(run.size()) != ca.t + 1) return false;
  for (const auto& c : run)
    if (static_cast<int>(c.size()) != q) return false;
  if (run[0] != ca.initial) return false;
  std::set<std::array<int, 4>> allowed(ca.transitions.begin(), ca.transitions.end());
  for (int s = 0; s < ca.t; ++s) {
    if (run[s + 1][0] != ca.left || run[s + 1][q - 1] != ca.right) return false;
    for (int i = 1; i + 1 < q; ++i)
      if (!allowed.count({run[s][i - 1], run[s][i], run[s][i + 1], run[s + 1][i]})) return false;
  }
  auto acc = [&](int s) { return std::binary_search(ca.accepting.begin(), ca.accepting.end(), s); };
  const auto& last = run[ca.t];
  switch (ca.acceptance) {
    case Acceptance::OneAccepting: return std::any_of(last.begin(), last.end(), acc);
    case Acceptance::AllAccepting: return std::all_of(last.begin() + 1, last.end() - 1, acc);
    case Acceptance::NonHalting: return true;
  }
  return false;
}

bool check(const ChainedCnf& c, const Json& cert) {
  auto blocks = cert.get<std::vector<std::vector<int>>>();
  if (static_cast<int>(blocks.size()) != c.r) return false;
  std::vector<std::vector<char>> val(c.r, std::vector<char>(c.q, 0));
  for (int i = 0; i < c.r; ++i) {
    if (static_cast<int>(blocks[i].size()) != c.k) return false;
    for (int x : blocks[i]) {
      if (x < 0 || x >= c.q || val[i][x]) return false;
      val[i][x] = 1;
    }
    for (const auto& g : c.partition) {
      int on = 0;
      for (int x : g) on += val[i][x];
      if (on != 1) return false;
    }
  }
  for (int i = 0; i + 1 < c.r; ++i)
    for (const auto& cl : c.junctions[i])
      if (!satisfied(cl, val[i], val[i + 1], c.q)) return false;
  for (const auto& cl : c.first)
    if (!satisfied(cl, val[0], val[0], c.q)) return false;
  for (const auto& cl : c.last)
    if (!satisfied(cl, val[c.r - 1], val[c.r - 1], c.q)) return false;
  return true;
}

bool check(const LayeredGraph& g, const Json& cert) {
  auto w = cert.get<std::vector<int>>();
  auto mat = adjacency_matrix(g.graph);
  std::vector<std::vector<char>> seen(g.r + 1, std::vector<char>(g.k + 1, 0));
  for (int v : w) {
    if (v < 0 || v >= g.graph.n) return false;
    seen[g.layer[v]][g.color[v]] = 1;
  }
  for (int i = 1; i <= g.r; ++i)
    for (int c = 1; c <= g.k; ++c)
      if (!seen[i][c]) return false;
  bool clique = g.variant == ChainedVariant::Clique;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b) {
      int u = w[a], v = w[b];
      if (u == v) return false;
      if (std::abs(g.layer[u] - g.layer[v]) > 1) continue;
      if (static_cast<bool>(mat[u][v]) != clique) return false;
    }
  return true;
}

bool check(const Nnccm& m, const Json& cert) {
  auto trace = cert.get<std::vector<std::vector<int>>>();
  if (trace.size() != m.checks.size()) return false;
  std::vector<int> prev(m.k, 0);
  for (size_t i = 0; i < trace.size(); ++i) {
    const auto& cur = trace[i];
    if (static_cast<int>(cur.size()) != m.k) return false;
    for (int c = 0; c < m.k; ++c)
      if (cur[c] < prev[c] || cur[c] > m.n) return false;
    const auto& ch = m.checks[i];
    if (cur[ch.c1 - 1] == ch.r1 && cur[ch.c2 - 1] == ch.r2) return false;
    prev = cur;
  }
  return true;
}

bool check(const ListColoringInstance& inst, const Json& cert) {
  auto col = cert.get<std::vector<int>>();
  if (static_cast<int>(col.size()) != inst.graph.n) return false;
  auto lists = effective_lists(inst);
  for (int v = 0; v < inst.graph.n; ++v)
    if (!std::binary_search(lists[v].begin(), lists[v].end(), col[v])) return false;
  for (auto [u, v] : inst.graph.edges)
    if (col[u] == col[v]) return false;
  return true;
}

bool check_set(const Graph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

bool check(const PathwidthVertexInstance& inst, const Json& cert) {
  auto s = cert.get<std::vector<int>>();
  if (!check_set(inst.graph, s)) return false;
  const int size = static_cast<int>(s.size());
  switch (inst.problem) {
    case VertexProblem::DominatingSet:
      return size <= inst.K && is_dominating(adjacency_lists(inst.graph), s);
    case VertexProblem::IndependentSet:
      return size >= inst.K && is_independent(adjacency_matrix(inst.graph), s);
    case VertexProblem::Clique:
      return size >= inst.K && is_clique(adjacency_matrix(inst.graph), s);
  }
  return false;
}

bool check(const SchedulingInstance& inst, const Json& cert) {
  auto f = cert.get<std::vector<int>>();
  if (static_cast<int>(f.size()) != inst.num_tasks) return false;
  std::map<int, int> load;
  for (int x : f) {
    if (x < 1 || x > inst.deadline) return false;
    if (++load[x] > inst.machines) return false;
  }
  for (auto [a, b] : inst.prec)
    if (f[a] >= f[b]) return false;
  return true;
}

bool check(const UniformEmulationInstance& inst, const Json& cert) {
  auto f = cert.get<std::vector<int>>();
  if (f.size() != inst.weights.size()) return false;
  std::vector<long long> fiber(inst.m + 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 1 || f[i] > inst.m) return false;
    if (i > 0 && std::abs(f[i] - f[i - 1]) > 1) return false;
    fiber[f[i]] += inst.weights[i];
  }
  for (int j = 1; j <= inst.m; ++j)
    if (fiber[j] != inst.c) return false;
  return true;
}

bool check(const BandwidthInstance& inst, const Json& cert) {
  auto f = cert.get<std::vector<int>>();
  if (static_cast<int>(f.size()) != inst.graph.n) return false;
  std::vector<char> used(inst.graph.n + 1, 0);
  for (int x : f) {
    if (x < 1 || x > inst.graph.n || used[x]) return false;
    used[x] = 1;
  }
  for (auto [u, v] : inst.graph.edges)
    if (std::abs(f[u] - f[v]) > inst.k) return false;
  return true;
}

bool check(const ReconfigurationInstance& inst, const Json& cert) {
  auto seq = cert.get<std::vector<std::vector<int>>>();
  const int len = static_cast<int>(seq.size());
  if (len < 1 || len > inst.T || (inst.exact && len != inst.T)) return false;
  if (seq.front() != inst.start || seq.back() != inst.target) return false;
  auto mat = adjacency_matrix(inst.graph);
  for (const auto& s : seq) {
    if (!check_set(inst.graph, s) || static_cast<int>(s.size()) != inst.tokens) return false;
    if (!satisfies_kind(inst.graph, inst.kind, s)) return false;
  }
  for (int i = 0; i + 1 < len; ++i) {
    std::vector<int> gone, added;
    std::set_difference(seq[i].begin(), seq[i].end(), seq[i + 1].begin(), seq[i + 1].end(),
                        std::back_inserter(gone));
    std::set_difference(seq[i + 1].begin(), seq[i + 1].end(), seq[i].begin(), seq[i].end(),
                        std::back_inserter(added));
    if (gone.size() != 1 || added.size() != 1) return false;
    if (inst.rule == MoveRule::TokenSliding && !mat[gone[0]][added[0]]) return false;
  }
  return true;
}

bool check(const DfaCollection& d, const Json& cert) {
  auto word = cert.get<std::vector<int>>();
  for (int x : word)
    if (x < 0 || x >= d.alphabet) return false;
  for (const auto& m : d.automata) {
    int s = m.start;
    for (int x : word) s = m.delta[static_cast<size_t>(s) * d.alphabet + x];
    if (!std::binary_search(m.accepting.begin(), m.accepting.end(), s)) return false;
  }
  return true;
}

bool is_subsequence(const std::string& s, const std::string& of) {
  size_t i = 0;
  for (char ch : of)
    if (i < s.size() && s[i] == ch) ++i;
  return i == s.size();
}

bool check(const LcsInstance& inst, const Json& cert) {
  auto s = cert.get<std::string>();
  if (static_cast<int>(s.size()) < inst.m) return false;
  return std::all_of(inst.strings.begin(), inst.strings.end(),
                     [&](const std::string& t) { return is_subsequence(s, t); });
}

}  // namespace

bool check_certificate(const Instance& inst, const Json& certificate) {
  require_valid(inst);
  try {
    return std::visit([&](const auto& x) { return check(x, certificate); }, inst);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("certificate shape mismatch: ") + e.what());
  }
}

}  // namespace xnlp
