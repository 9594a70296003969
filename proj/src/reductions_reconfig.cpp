#include <algorithm>
#include <map>

#include "xnlp/reductions.hpp"

namespace xnlp {

namespace {

struct Builder {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  int add(std::string name) {
    names.push_back(std::move(name));
    return static_cast<int>(names.size()) - 1;
  }
  void join(int a, int b) { edges.push_back({a, b}); }
  Graph graph() {
    Graph g = make_graph(static_cast<int>(names.size()), edges);
    g.names = names;
    return g;
  }
};

std::string idx(int a, int b) { return std::to_string(a) + "_" + std::to_string(b); }

}  // namespace

ReductionOutput chained_sat_to_ts_ds_reconfig(const ChainedCnf& c, int mutant) {
  require_valid(c);
  if (!c.positive) throw ValidationError("the reconfiguration encoding requires a positive instance");
  if (c.partition.empty()) throw ValidationError("the reconfiguration encoding requires a partitioned instance");
  if (!c.regular) throw ValidationError("the reconfiguration encoding requires a regular instance");
  if (!c.first.empty() || !c.last.empty())
    throw ValidationError("the reconfiguration encoding expects empty boundary formulas");
  const int k = c.k, q = c.q;
  const int r = c.r + c.r % 2;  // odd chains get a free final block
  const int L = 2 * r - 2;
  std::vector<int> owner(q);
  for (int g = 0; g < k; ++g)
    for (int x : c.partition[g]) owner[x] = g;

  Builder b;
  std::vector<int> t(L + 1);
  for (int j = 0; j <= L; ++j) t[j] = b.add("t" + std::to_string(j));
  for (int j = 0; j < L; ++j) b.join(t[j], t[j + 1]);
  for (int a = 1; a <= 2; ++a) {
    int g = b.add("gt" + std::to_string(a));
    for (int j = 0; j <= L; ++j) b.join(g, t[j]);
  }
  const int d = b.add("d");
  b.join(d, b.add("pd"));
  for (int j = 0; j <= L; ++j) b.join(d, t[j]);
  // v[i][x], blocks 1..r
  std::vector<std::vector<int>> v(r + 1, std::vector<int>(q));
  for (int i = 1; i <= r; ++i)
    for (int x = 0; x < q; ++x) {
      v[i][x] = b.add("v" + idx(i, x));
      b.join(d, v[i][x]);
    }
  for (int i = 1; i + 2 <= r; ++i)
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) b.join(v[i][x], v[i + 2][y]);
  const Cnf& f1 = c.r >= 2 ? c.junctions[0] : Cnf{};
  for (int i = 1; i <= c.r - 1; ++i)
    for (size_t ci = 0; ci < f1.size(); ++ci) {
      int w = b.add("w" + idx(static_cast<int>(ci), i));
      for (int lit : f1[ci]) b.join(w, lit <= q ? v[i][lit - 1] : v[i + 1][lit - q - 1]);
      for (int j = 0; j <= L; ++j)
        if (j != 2 * i - 1 || mutant == 1) b.join(w, t[j]);
    }
  for (int i = 1; i <= r; ++i)
    for (int l = 0; l < k; ++l) {
      int m = b.add("m" + idx(i, l + 1));
      for (int x : c.partition[l]) b.join(m, v[i][x]);
      const int open = i <= 2 ? 1 : 2 * i - 3;
      for (int j = 0; j <= L; ++j)
        if (j != open) b.join(m, t[j]);
    }
  // guardian[par][l][a], par 1 for odd blocks
  std::vector<std::vector<std::vector<int>>> guard(2, std::vector<std::vector<int>>(k, std::vector<int>(2)));
  for (int par = 0; par < 2; ++par)
    for (int l = 0; l < k; ++l)
      for (int a = 0; a < 2; ++a) {
        int g = b.add("g" + std::to_string(par) + "_" + idx(l + 1, a + 1));
        guard[par][l][a] = g;
        for (int i = 1; i <= r; ++i)
          if (i % 2 == par)
            for (int x : c.partition[l]) b.join(g, v[i][x]);
      }
  auto fan = [&](const std::string& prefix, int number, int block, int l) {
    int s = b.add(prefix + std::to_string(number));
    b.join(d, s);
    for (int x : c.partition[l]) b.join(s, v[block][x]);
    for (int a = 0; a < 2; ++a) b.join(s, guard[block % 2][l][a]);
    return s;
  };
  std::vector<int> start{t[0], d}, target{t[L], d};
  for (int l = 0; l < k; ++l) start.push_back(fan("s", l + 1, 1, l));
  for (int l = 0; l < k; ++l) start.push_back(fan("s", k + l + 1, 2, l));
  for (int l = 0; l < k; ++l) target.push_back(fan("s'", l + 1, r - 1, l));
  for (int l = 0; l < k; ++l) target.push_back(fan("s'", k + l + 1, r, l));
  std::sort(start.begin(), start.end());
  std::sort(target.begin(), target.end());

  ReconfigurationInstance out;
  out.graph = b.graph();
  out.kind = SetKind::DominatingSet;
  out.rule = MoveRule::TokenSliding;
  out.start = start;
  out.target = target;
  out.tokens = 2 * k + 2;
  const long long moves = static_cast<long long>(k) * (r + 2) + L;
  out.T = static_cast<int>(moves + 1);
  out.exact = true;
  ReductionOutput res;
  res.parameter = out.tokens;
  res.constants = {{"blocks", r}, {"timer_length", L}, {"tokens", out.tokens}, {"moves", moves},
                   {"T", out.T},  {"T_short", 5 * r / 2 - 2}};
  res.target = std::move(out);
  return res;
}

ReductionOutput ts_to_tj_timer(const ReconfigurationInstance& inst, int mutant) {
  require_valid(inst);
  const char* foreign = "timer doubling expects an instance from the sliding dominating set construction";
  if (inst.kind != SetKind::DominatingSet || inst.rule != MoveRule::TokenSliding || inst.graph.names.empty())
    throw ValidationError(foreign);
  std::map<std::string, int> id;
  for (int v = 0; v < inst.graph.n; ++v) id[inst.graph.names[v]] = v;
  if (!id.count("t0") || !id.count("d")) throw ValidationError(foreign);
  int L = 0;
  while (id.count("t" + std::to_string(L + 1))) ++L;
  std::vector<int> t(L + 1);
  for (int j = 0; j <= L; ++j) t[j] = id["t" + std::to_string(j)];
  if (!std::binary_search(inst.start.begin(), inst.start.end(), t[0]) ||
      !std::binary_search(inst.target.begin(), inst.target.end(), t[L]))
    throw ValidationError(foreign);

  Builder b;
  b.names = inst.graph.names;
  b.edges = inst.graph.edges;
  const int d = id["d"];
  std::vector<int> tp(L + 1);
  for (int j = 0; j <= L; ++j) {
    tp[j] = b.add("t'" + std::to_string(j));
    b.join(d, tp[j]);
  }
  for (int j = 0; j < L; ++j) b.join(tp[j], tp[j + 1]);
  for (int a = 1; a <= 2; ++a) {
    int g = b.add("gt'" + std::to_string(a));
    for (int j = 0; j <= L; ++j) b.join(g, tp[j]);
  }
  for (int i = 0; i <= L; ++i) {
    int g = b.add("gj" + std::to_string(i));
    for (int j = 0; j <= L; ++j)
      if (j != i) b.join(g, t[j]);
    if (i >= 1 && mutant != 1) b.join(g, tp[i - 1]);
    b.join(g, tp[i]);
  }
  ReconfigurationInstance out = inst;
  out.graph = b.graph();
  out.rule = MoveRule::TokenJumping;
  out.start.push_back(tp[0]);
  out.target.push_back(tp[L]);
  std::sort(out.start.begin(), out.start.end());
  std::sort(out.target.begin(), out.target.end());
  out.tokens = inst.tokens + 1;
  out.T = inst.T + L;
  ReductionOutput res;
  res.parameter = out.tokens;
  res.constants = {{"timer_length", L}, {"tokens", out.tokens}, {"T", out.T}, {"extra_moves", L}};
  res.target = std::move(out);
  return res;
}

namespace {

ReductionOutput clique_reconfig(const LayeredGraph& g, bool sliding, int mutant) {
  require_valid(g);
  if (g.variant != ChainedVariant::Clique)
    throw ValidationError("clique reconfiguration encoding expects a chained clique instance");
  const int k = g.k, r = g.r, n = g.graph.n;
  std::vector<int> level = g.layer, color = g.color;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.graph.edges)
    if (level[a] != level[b] || color[a] != color[b]) edges.push_back({a, b});
  std::vector<int> start, target;
  for (int sentinel : {-1, 0, r + 1, r + 2})
    for (int j = 1; j <= k; ++j) {
      int v = static_cast<int>(level.size());
      level.push_back(sentinel);
      color.push_back(j);
      (sentinel <= 0 ? start : target).push_back(v);
    }
  const int total = static_cast<int>(level.size());
  for (int v = 0; v < total; ++v)
    for (int w = v + 1; w < total; ++w) {
      if (v < n && w < n) continue;  // source pairs handled above
      int i = level[v], i2 = level[w];
      int lo = std::min(i, i2), hi = std::max(i, i2);
      bool e = false;
      if (hi <= 0) e = true;
      else if (lo == 0 && hi == 1) e = true;
      else if (lo >= r + 1) e = true;
      else if (lo == r && hi == r + 1) e = mutant != 1;
      if (hi - lo == 2) {
        int low = i < i2 ? v : w, high = i < i2 ? w : v;
        e = sliding ? color[low] >= color[high] : color[low] != color[high];
      }
      if (e) edges.push_back({v, w});
    }
  // Distance-two pairs among source vertices.
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (level[w] == level[v] + 2 && (sliding ? color[v] >= color[w] : color[v] != color[w]))
        edges.push_back({v, w});

  ReconfigurationInstance out;
  out.graph = make_graph(total, edges);
  out.kind = SetKind::Clique;
  out.rule = sliding ? MoveRule::TokenSliding : MoveRule::TokenJumping;
  out.start = start;
  out.target = target;
  out.tokens = 2 * k;
  const long long moves = static_cast<long long>(k) * (r + 2);
  out.T = static_cast<int>(moves + 1);
  out.exact = true;
  ReductionOutput res;
  res.parameter = out.tokens;
  res.constants = {{"tokens", out.tokens}, {"moves", moves}, {"T", out.T}, {"levels", level}};
  res.target = std::move(out);
  return res;
}

}  // namespace

ReductionOutput cmc_to_tj_clique_reconfig(const LayeredGraph& g, int mutant) {
  return clique_reconfig(g, false, mutant);
}

ReductionOutput cmc_to_ts_clique_reconfig(const LayeredGraph& g, int mutant) {
  return clique_reconfig(g, true, mutant);
}

ReductionOutput reconfig_complement(const ReconfigurationInstance& inst, int mutant) {
  require_valid(inst);
  if (inst.kind != SetKind::Clique) throw ValidationError("complementation expects a clique instance");
  ReconfigurationInstance out = inst;
  out.graph = complement(inst.graph);
  out.graph.names = inst.graph.names;
  out.kind = SetKind::IndependentSet;
  if (mutant == 1) out.T = std::max(1, inst.T - 1);
  ReductionOutput res;
  res.parameter = out.tokens;
  res.constants = {{"tokens", out.tokens}, {"T", out.T}};
  res.target = std::move(out);
  return res;
}

}  // namespace xnlp
