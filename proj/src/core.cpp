#include "xnlp/core.hpp"

#include <algorithm>
#include <set>

namespace xnlp {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> mat(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) mat[u][v] = mat[v][u] = 1;
  return mat;
}

Graph complement(const Graph& g) {
  auto mat = adjacency_matrix(g);
  Graph h;
  h.n = g.n;
  h.names = g.names;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!mat[u][v]) h.edges.emplace_back(u, v);
  return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  auto adj = adjacency_lists(g);
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

int pd_width(const PathDecomposition& pd) {
  int w = -1;
  for (const auto& b : pd.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<std::string> validate_graph(const Graph& g) {
  std::vector<std::string> d;
  if (g.n < 0) d.push_back("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      d.push_back("edge endpoint out of range in (" + std::to_string(u) + "," + std::to_string(v) + ")");
      continue;
    }
    if (u == v) {
      d.push_back("self-loop at " + std::to_string(u));
      continue;
    }
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      d.push_back("duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }
  if (!g.names.empty() && static_cast<int>(g.names.size()) != g.n)
    d.push_back("names must list one entry per vertex");
  return d;
}

std::vector<std::string> validate_pd(const Graph& g, const PathDecomposition& pd) {
  std::vector<std::string> d;
  std::vector<int> first(g.n, -1), last(g.n, -1), count(g.n, 0);
  for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i) {
    const auto& bag = pd.bags[i];
    for (size_t j = 0; j < bag.size(); ++j) {
      int v = bag[j];
      if (v < 0 || v >= g.n) {
        d.push_back("bag " + std::to_string(i) + " holds out-of-range vertex " + std::to_string(v));
        continue;
      }
      if (j > 0 && bag[j - 1] >= v) {
        d.push_back("bag " + std::to_string(i) + " is not sorted and duplicate-free");
        continue;
      }
      if (first[v] < 0) first[v] = i;
      last[v] = i;
      ++count[v];
    }
  }
  if (!d.empty()) return d;
  for (int v = 0; v < g.n; ++v) {
    if (first[v] < 0)
      d.push_back("vertex " + std::to_string(v) + " is in no bag");
    else if (last[v] - first[v] + 1 != count[v])
      d.push_back("interval property violated for vertex " + std::to_string(v));
  }
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n || first[u] < 0 || first[v] < 0) continue;
    int lo = std::max(first[u], first[v]), hi = std::min(last[u], last[v]);
    bool covered = false;
    for (int i = lo; i <= hi && !covered; ++i) {
      const auto& bag = pd.bags[i];
      covered = std::binary_search(bag.begin(), bag.end(), u) && std::binary_search(bag.begin(), bag.end(), v);
    }
    if (!covered)
      d.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
  }
  return d;
}

}  // namespace xnlp
