#include <algorithm>
#include <set>

#include "xnlp/reductions.hpp"

namespace xnlp {

ReductionOutput list_coloring_to_precoloring(const ListColoringInstance& inst, int mutant) {
  require_valid(inst);
  const auto lists = effective_lists(inst);
  std::set<int> pal;
  for (const auto& l : lists) pal.insert(l.begin(), l.end());
  std::vector<int> palette(pal.begin(), pal.end());
  const int n = inst.graph.n;

  std::vector<std::pair<int, int>> edges = inst.graph.edges;
  std::vector<int> pre(n, -1);
  std::vector<std::vector<int>> pendants(n);
  for (int v = 0; v < n; ++v)
    for (int gamma : palette) {
      if (mutant != 1 && std::binary_search(lists[v].begin(), lists[v].end(), gamma)) continue;
      int w = static_cast<int>(pre.size());
      pre.push_back(gamma);
      pendants[v].push_back(w);
      edges.push_back({v, w});
    }
  PathDecomposition pd;
  std::vector<char> seen(n, 0);
  for (const auto& bag : inst.pd.bags) {
    pd.bags.push_back(bag);
    for (int v : bag) {
      if (seen[v]) continue;
      seen[v] = 1;
      for (int w : pendants[v]) {
        auto b = bag;
        b.push_back(w);
        std::sort(b.begin(), b.end());
        pd.bags.push_back(b);
      }
    }
  }
  ListColoringInstance out;
  out.graph = make_graph(static_cast<int>(pre.size()), edges);
  out.pd = pd;
  out.lists.assign(pre.size(), palette);
  out.precolored = pre;
  ReductionOutput r;
  r.parameter = pd_width(out.pd);
  r.constants = {{"palette", palette.size()}, {"pendants", static_cast<int>(pre.size()) - n}};
  r.target = std::move(out);
  return r;
}

ReductionOutput list_coloring_to_cmc(const ListColoringInstance& inst, int mutant) {
  require_valid(inst);
  const auto lists = effective_lists(inst);
  const auto mat = adjacency_matrix(inst.graph);
  auto bags = inst.pd.bags;
  if (bags.empty()) bags.push_back({});
  size_t size = 1;
  for (const auto& b : bags) size = std::max(size, b.size());
  const int k = static_cast<int>(size);  // width + 1

  // Padded bags; padding vertices get ids from n upward, list {1}, no edges.
  int extra = inst.graph.n;
  std::vector<std::vector<int>> padded;
  for (auto b : bags) {
    std::sort(b.begin(), b.end());
    while (static_cast<int>(b.size()) < k) b.push_back(extra++);
    padded.push_back(b);
  }
  auto list_of = [&](int v) { return v < inst.graph.n ? lists[v] : std::vector<int>{1}; };
  auto adjacent = [&](int v, int w) { return v < inst.graph.n && w < inst.graph.n && mat[v][w]; };

  LayeredGraph out;
  out.r = static_cast<int>(padded.size());
  out.k = k;
  struct W {
    int v, c;
  };
  std::vector<std::vector<std::pair<W, int>>> layer_vertices(padded.size());
  for (size_t i = 0; i < padded.size(); ++i)
    for (int pos = 0; pos < k; ++pos) {
      int v = padded[i][pos];
      for (int c : list_of(v)) {
        int id = static_cast<int>(out.layer.size());
        out.layer.push_back(static_cast<int>(i) + 1);
        out.color.push_back(pos + 1);
        layer_vertices[i].push_back({{v, c}, id});
      }
    }
  std::vector<std::pair<int, int>> edges;
  auto compatible = [&](const W& a, const W& b) { return a.c != b.c || !adjacent(a.v, b.v); };
  for (size_t i = 0; i < padded.size(); ++i) {
    const auto& L = layer_vertices[i];
    for (size_t a = 0; a < L.size(); ++a)
      for (size_t b = a + 1; b < L.size(); ++b)
        if (L[a].first.v != L[b].first.v && compatible(L[a].first, L[b].first))
          edges.push_back({L[a].second, L[b].second});
    if (i + 1 == padded.size()) continue;
    for (const auto& [x, idx] : L)
      for (const auto& [y, idy] : layer_vertices[i + 1]) {
        bool e = x.v == y.v ? (x.c == y.c || mutant == 1) : compatible(x, y);
        if (e) edges.push_back({idx, idy});
      }
  }
  out.graph = make_graph(static_cast<int>(out.layer.size()), edges);
  ReductionOutput r;
  r.parameter = out.k;
  r.constants = {{"colors", k}, {"layers", out.r}, {"padding", extra - inst.graph.n}};
  r.target = std::move(out);
  return r;
}

ReductionOutput partial_complement(const LayeredGraph& g, int mutant) {
  require_valid(g);
  const auto mat = adjacency_matrix(g.graph);
  LayeredGraph out = g;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.graph.n; ++v)
    for (int w = v + 1; w < g.graph.n; ++w) {
      if (std::abs(g.layer[v] - g.layer[w]) > 1) continue;
      bool keep = mutant == 1 && g.layer[v] == g.layer[w];
      if (keep ? mat[v][w] : !mat[v][w]) edges.push_back({v, w});
    }
  out.graph = make_graph(g.graph.n, edges);
  out.graph.names = g.graph.names;
  out.variant = g.variant == ChainedVariant::Clique ? ChainedVariant::IndependentSet : ChainedVariant::Clique;
  ReductionOutput r;
  r.parameter = out.k;
  r.constants = {{"edges", out.graph.edges.size()}};
  r.target = std::move(out);
  return r;
}

ReductionOutput cmc_to_nnccm(const LayeredGraph& g, int mutant) {
  require_valid(g);
  if (g.variant != ChainedVariant::Clique)
    throw ValidationError("the counter machine encoding expects a chained clique instance");
  const int k = g.k;
  int m = 1;
  {
    std::vector<std::vector<int>> cnt(g.r + 1, std::vector<int>(k + 1, 0));
    for (int v = 0; v < g.graph.n; ++v) m = std::max(m, ++cnt[g.layer[v]][g.color[v]]);
  }
  const int layers = g.r + (g.r % 2);
  const int n = m * layers;
  // slot[j][i] holds the vertex ids of layer j, color i; -1 marks padding.
  std::vector<std::vector<std::vector<int>>> slot(layers + 1, std::vector<std::vector<int>>(k + 1));
  for (int v = 0; v < g.graph.n; ++v) slot[g.layer[v]][g.color[v]].push_back(v);
  const auto mat = adjacency_matrix(g.graph);
  const int dummy_layer = g.r % 2 ? g.r + 1 : 0;
  // Vertices are (layer, color, position); adjacency of the padded graph.
  auto adjacent = [&](int j, int i, int l, int j2, int i2, int l2) {
    auto id = [&](int jj, int ii, int ll) {
      return ll < static_cast<int>(slot[jj][ii].size()) ? slot[jj][ii][ll] : -1;
    };
    if (j == dummy_layer && j2 == dummy_layer) return true;
    if (j == dummy_layer) return id(j2, i2, l2) >= 0;
    if (j2 == dummy_layer) return id(j, i, l) >= 0;
    int a = id(j, i, l), b = id(j2, i2, l2);
    return a >= 0 && b >= 0 && mat[a][b];
  };
  auto counter = [&](int color, int layer, bool plus) {
    return (color - 1) * 4 + (layer % 2 ? 0 : 2) + (plus ? 0 : 1) + 1;
  };

  Nnccm out;
  out.k = 4 * k;
  out.n = n;
  auto range = [&](int c1, int c2, int lo1, int hi1, int lo2, int hi2, int skip2 = -1) {
    for (int a = lo1; a <= hi1; ++a)
      for (int b = lo2; b <= hi2; ++b)
        if (b != skip2) out.checks.push_back({c1, c2, a, b});
  };
  auto selection = [&](int j) {
    for (int i = 1; i <= k; ++i) {
      int c1 = counter(i, j, true), c2 = counter(i, j, false);
      range(c1, c2, 0, (j - 1) * m, 0, n);
      range(c1, c2, 0, n, 0, (j - 1) * m - 1);
      for (int l = 1; l <= m; ++l) range(c1, c2, (j - 1) * m + l, (j - 1) * m + l, (j - 1) * m, j * m, j * m + 1 - l);
      range(c1, c2, j * m + 1, n, 0, n);
      range(c1, c2, 0, n, j * m + 1, n);
    }
  };
  for (int j = 1; j <= layers; ++j) {
    selection(j);
    for (int i = 1; i <= k; ++i)
      for (int i2 = i + 1; i2 <= k; ++i2)
        for (int l = 0; l < m; ++l)
          for (int l2 = 0; l2 < m; ++l2)
            if (!adjacent(j, i, l, j, i2, l2))
              out.checks.push_back({counter(i, j, true), counter(i2, j, true), (j - 1) * m + l + 1, (j - 1) * m + l2 + 1});
    if (j > 1 && mutant != 1)
      for (int i = 1; i <= k; ++i)
        for (int i2 = 1; i2 <= k; ++i2)
          for (int l = 0; l < m; ++l)
            for (int l2 = 0; l2 < m; ++l2)
              if (!adjacent(j, i, l, j - 1, i2, l2))
                out.checks.push_back(
                    {counter(i, j, true), counter(i2, j - 1, true), (j - 1) * m + l + 1, (j - 2) * m + l2 + 1});
    selection(j);
    if (j > 1) selection(j - 1);
  }
  ReductionOutput r;
  r.parameter = out.k;
  r.constants = {{"counters", out.k}, {"n", n}, {"m", m}, {"layers", layers}, {"checks", out.checks.size()}};
  r.target = std::move(out);
  return r;
}

}  // namespace xnlp
