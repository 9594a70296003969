#include <algorithm>
#include <array>
#include <map>

#include "xnlp/reductions.hpp"

namespace xnlp {

namespace {

std::vector<int> group_owner(const ChainedCnf& c) {
  std::vector<int> owner(c.q, -1);
  for (size_t g = 0; g < c.partition.size(); ++g)
    for (int x : c.partition[g]) owner[x] = static_cast<int>(g);
  return owner;
}

void require_partition(const ChainedCnf& c, const char* what) {
  if (c.partition.empty()) throw ValidationError(std::string(what) + " requires a partitioned instance");
}

void require_regular(const ChainedCnf& c, const char* what) {
  if (!c.regular) throw ValidationError(std::string(what) + " requires a regular instance");
}

int ceil_log2(long long v) {
  int t = 0;
  while ((1LL << t) < v) ++t;
  return t;
}

}  // namespace

ReductionOutput cnf_positivize(const ChainedCnf& c, int mutant) {
  require_valid(c);
  if (c.partition.empty()) throw ValidationError("positivization requires exactly-one groups");
  const auto owner = group_owner(c);
  auto rewrite = [&](const Cnf& f) {
    Cnf out;
    for (const auto& cl : f) {
      Clause n;
      for (int lit : cl) {
        if (lit > 0) {
          n.push_back(lit);
          continue;
        }
        int v = -lit - 1;
        int base = (v / c.q) * c.q;
        int local = v % c.q;
        for (int y : c.partition[owner[local]])
          if (y != local || mutant == 1) n.push_back(base + y + 1);
      }
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
      out.push_back(n);
    }
    return out;
  };
  ChainedCnf out = c;
  for (auto& f : out.junctions) f = rewrite(f);
  out.first = rewrite(c.first);
  out.last = rewrite(c.last);
  out.positive = true;
  ReductionOutput r;
  r.parameter = out.k;
  r.constants = {{"k", out.k}, {"q", out.q}};
  r.target = std::move(out);
  return r;
}

ReductionOutput cnf_regularize_ii(const ChainedCnf& c, int mutant) {
  require_valid(c);
  require_regular(c, "regularization");
  if (c.r < 2) throw ValidationError("regularization needs at least two blocks");
  const int q = c.q, r = c.r, nq = q + r;
  auto remap = [&](int lit) {
    int v = std::abs(lit);
    if (v > q) v += r;
    return lit < 0 ? -v : v;
  };
  auto t = [&](int j) { return q + j + 1; };       // tracker j on X
  auto tn = [&](int j) { return nq + q + j + 1; };  // tracker j on X'

  Cnf f1;
  for (const auto& cl : c.junctions[0]) {
    Clause n;
    for (int lit : cl) n.push_back(remap(lit));
    f1.push_back(n);
  }
  Clause some, some_next;
  for (int j = 0; j < r; ++j) {
    some.push_back(t(j));
    some_next.push_back(tn(j));
  }
  f1.push_back(some);
  f1.push_back(some_next);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      f1.push_back({-t(a), -t(b)});
      f1.push_back({-tn(a), -tn(b)});
    }
  for (int j = 0; j + 1 < r; ++j) {
    f1.push_back({-t(j), tn(j + 1)});
    f1.push_back({t(j), -tn(j + 1)});
  }
  f1.push_back({-t(r - 1)});
  f1.push_back({-tn(0)});
  for (const auto& cl : c.first) {
    Clause n{-t(0)};
    n.insert(n.end(), cl.begin(), cl.end());
    f1.push_back(n);
  }
  if (mutant != 1)
    for (const auto& cl : c.last) {
      Clause n{-tn(r - 1)};
      for (int lit : cl) n.push_back(lit < 0 ? lit - nq : lit + nq);
      f1.push_back(n);
    }

  ChainedCnf out;
  out.r = r;
  out.q = nq;
  out.k = c.k + 1;
  out.regular = true;
  out.junctions.assign(r - 1, f1);
  if (!c.partition.empty()) {
    out.partition = c.partition;
    std::vector<int> g;
    for (int j = 0; j < r; ++j) g.push_back(q + j);
    out.partition.push_back(g);
  }
  ReductionOutput res;
  res.parameter = out.k;
  res.constants = {{"k", out.k}, {"q", out.q}, {"trackers", r}};
  res.target = std::move(out);
  return res;
}

ReductionOutput chained_sat_to_list_coloring(const ChainedCnf& c, int mutant) {
  require_valid(c);
  if (!c.positive) throw ValidationError("list coloring encoding requires a positive instance");
  require_partition(c, "list coloring encoding");
  require_regular(c, "list coloring encoding");
  const int r = c.r, q = c.q, k = c.k;
  const auto owner = group_owner(c);
  auto vtx = [&](int block, int g) { return block * k + g; };
  auto color = [&](int block, int x) { return block * q + x + 1; };
  auto ncolor = [&](int block, int g) { return r * q + block * k + g + 1; };

  std::vector<std::vector<int>> lists;
  for (int i = 0; i < r; ++i)
    for (int g = 0; g < k; ++g) {
      std::vector<int> l;
      for (int x : c.partition[g]) l.push_back(color(i, x));
      lists.push_back(l);
    }
  std::vector<std::pair<int, int>> edges;
  PathDecomposition pd;

  auto base_bag = [&](int i) {
    std::vector<int> bag;
    for (int g = 0; g < k; ++g) bag.push_back(vtx(i, g));
    if (i + 1 < r)
      for (int g = 0; g < k; ++g) bag.push_back(vtx(i + 1, g));
    return bag;
  };
  auto add_clause = [&](const Clause& cl, int block, bool pair, const std::vector<int>& base) {
    std::vector<int> blocks{block};
    if (pair) blocks.push_back(block + 1);
    int z = static_cast<int>(lists.size());
    std::vector<int> zl;
    for (int b : blocks)
      for (int g = 0; g < k; ++g) zl.push_back(ncolor(b, g));
    lists.push_back(zl);
    bool any = false;
    for (size_t bi = 0; bi < blocks.size(); ++bi)
      for (int x = 0; x < q; ++x) {
        int lit = static_cast<int>(bi) * q + x + 1;
        if (std::find(cl.begin(), cl.end(), lit) != cl.end()) continue;
        int b = blocks[bi];
        int w = static_cast<int>(lists.size());
        lists.push_back({color(b, x), ncolor(b, owner[x])});
        if (mutant != 1) edges.push_back({w, vtx(b, owner[x])});
        edges.push_back({w, z});
        auto bag = base;
        bag.push_back(z);
        bag.push_back(w);
        pd.bags.push_back(bag);
        any = true;
      }
    if (!any) {
      auto bag = base;
      bag.push_back(z);
      pd.bags.push_back(bag);
    }
  };

  if (r == 1) {
    auto base = base_bag(0);
    pd.bags.push_back(base);
    for (const auto& cl : c.first) add_clause(cl, 0, false, base);
    for (const auto& cl : c.last) add_clause(cl, 0, false, base);
  }
  for (int i = 0; i + 1 < r; ++i) {
    auto base = base_bag(i);
    pd.bags.push_back(base);
    if (i == 0)
      for (const auto& cl : c.first) add_clause(cl, 0, false, base);
    for (const auto& cl : c.junctions[i]) add_clause(cl, i, true, base);
    if (i + 2 == r)
      for (const auto& cl : c.last) add_clause(cl, r - 1, false, base);
  }
  for (auto& b : pd.bags) std::sort(b.begin(), b.end());

  ListColoringInstance out;
  out.graph = make_graph(static_cast<int>(lists.size()), edges);
  out.pd = pd;
  out.lists = lists;
  ReductionOutput res;
  res.parameter = pd_width(out.pd);
  res.constants = {{"vertices", out.graph.n}, {"colors", r * q + r * k}, {"width_bound", 2 * k + 1}};
  res.target = std::move(out);
  return res;
}

namespace {

// Shared preprocessing of the two logarithmic-pathwidth constructions: groups
// padded to 2^t slots and the junction template with the padding clauses.
struct LogPwSetup {
  int r = 1, k = 0, t = 1, slots = 2;
  Cnf clauses;  // over 2 blocks of k*slots padded variables, literals 1..2*k*slots
  // For every clause, the padded variables (block 0/1, group, slot) satisfying it.
  std::vector<std::vector<std::array<int, 3>>> satisfying;
};

LogPwSetup log_pw_setup(const ChainedCnf& c, const char* what) {
  require_valid(c);
  require_partition(c, what);
  require_regular(c, what);
  if (!c.first.empty() || !c.last.empty())
    throw ValidationError(std::string(what) + " expects empty boundary formulas");
  LogPwSetup s;
  s.r = c.r;
  s.k = c.k;
  size_t largest = 1;
  for (const auto& g : c.partition) largest = std::max(largest, g.size());
  s.t = std::max(1, ceil_log2(static_cast<long long>(largest)));
  s.slots = 1 << s.t;
  std::vector<int> owner(c.q), slot(c.q);
  for (size_t g = 0; g < c.partition.size(); ++g)
    for (size_t p = 0; p < c.partition[g].size(); ++p) {
      owner[c.partition[g][p]] = static_cast<int>(g);
      slot[c.partition[g][p]] = static_cast<int>(p);
    }
  const int half = s.k * s.slots;
  auto padded = [&](int block, int g, int p) { return block * half + g * s.slots + p + 1; };
  auto translate = [&](int lit) {
    int v = std::abs(lit) - 1;
    int block = v / c.q, x = v % c.q;
    int p = padded(block, owner[x], slot[x]);
    return lit < 0 ? -p : p;
  };
  if (c.r >= 2)
    for (const auto& cl : c.junctions[0]) {
      Clause n;
      for (int lit : cl) n.push_back(translate(lit));
      s.clauses.push_back(n);
    }
  if (c.r >= 2)
    for (int block = 0; block < 2; ++block)
      for (int g = 0; g < s.k; ++g)
        if (static_cast<int>(c.partition[g].size()) < s.slots) {
          Clause n;
          for (size_t p = 0; p < c.partition[g].size(); ++p) n.push_back(padded(block, g, static_cast<int>(p)));
          s.clauses.push_back(n);
        }
  for (const auto& cl : s.clauses) {
    std::vector<std::array<int, 3>> sat;
    for (int block = 0; block < 2; ++block)
      for (int g = 0; g < s.k; ++g)
        for (int p = 0; p < s.slots; ++p) {
          int lit = padded(block, g, p);
          bool ok = std::find(cl.begin(), cl.end(), lit) != cl.end();
          for (int other = 0; other < s.slots && !ok; ++other)
            if (other != p && std::find(cl.begin(), cl.end(), -padded(block, g, other)) != cl.end()) ok = true;
          if (ok) sat.push_back({block, g, p});
        }
    s.satisfying.push_back(sat);
  }
  return s;
}

}  // namespace

ReductionOutput chained_sat_to_log_pw_domset(const ChainedCnf& c, int mutant) {
  const auto s = log_pw_setup(c, "dominating set encoding");
  const int r = s.r, k = s.k, t = s.t;
  // Triangle (block, group, bit): marked-0, marked-1, degree-two vertex.
  auto tri = [&](int block, int g, int bit, int which) { return ((block * k + g) * t + bit) * 3 + which; };
  int n = r * k * t * 3;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r * k * t; ++i) {
    edges.push_back({3 * i, 3 * i + 1});
    edges.push_back({3 * i, 3 * i + 2});
    edges.push_back({3 * i + 1, 3 * i + 2});
  }
  PathDecomposition pd;
  auto triangles = [&](int block) {
    std::vector<int> v;
    for (int g = 0; g < k; ++g)
      for (int bit = 0; bit < t; ++bit)
        for (int w = 0; w < 3; ++w) v.push_back(tri(block, g, bit, w));
    return v;
  };
  if (r == 1) pd.bags.push_back(triangles(0));
  for (int i = 0; i + 1 < r; ++i) {
    auto base = triangles(i);
    auto more = triangles(i + 1);
    base.insert(base.end(), more.begin(), more.end());
    pd.bags.push_back(base);
    for (size_t ci = 0; ci < s.clauses.size(); ++ci) {
      std::vector<int> fixed = base;
      const int clause_vertex = n++;
      fixed.push_back(clause_vertex);
      std::vector<int> vs;
      std::map<std::array<int, 3>, int> vertex_of;
      for (int b = 0; b < 2; ++b)
        for (int g = 0; g < k; ++g) {
          const int z1 = n++, z2 = n++;
          fixed.push_back(z1);
          fixed.push_back(z2);
          for (int p = 0; p < s.slots; ++p) {
            const int v = n++;
            vs.push_back(v);
            vertex_of[{b, g, p}] = v;
            edges.push_back({v, z1});
            edges.push_back({v, z2});
            for (int bit = 0; bit < t; ++bit) {
              int value = (p >> (t - 1 - bit)) & 1;
              edges.push_back({v, tri(i + b, g, bit, 1 - value)});
            }
            if (mutant == 1) edges.push_back({v, clause_vertex});
          }
        }
      if (mutant != 1)
        for (const auto& y : s.satisfying[ci]) edges.push_back({vertex_of[y], clause_vertex});
      for (int v : vs) {
        auto bag = fixed;
        bag.push_back(v);
        pd.bags.push_back(bag);
      }
    }
  }
  for (auto& b : pd.bags) std::sort(b.begin(), b.end());
  PathwidthVertexInstance out;
  out.graph = make_graph(n, edges);
  out.pd = pd;
  out.problem = VertexProblem::DominatingSet;
  const long long cl = static_cast<long long>(s.clauses.size());
  out.K = static_cast<int>(static_cast<long long>(r) * k * t + 2LL * k * cl * (r - 1));
  ReductionOutput res;
  res.parameter = pd_width(out.pd);
  res.constants = {{"t", t}, {"clauses", cl}, {"K", out.K}, {"width_bound", 6 * k * t + 4 * k + 2}};
  res.target = std::move(out);
  return res;
}

ReductionOutput chained_sat_to_log_pw_indset(const ChainedCnf& c, int mutant) {
  const auto s = log_pw_setup(c, "independent set encoding");
  const int r = s.r, k = s.k, t = s.t;
  auto bitv = [&](int block, int g, int bit, int value) { return ((block * k + g) * t + bit) * 2 + value; };
  int n = r * k * t * 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r * k * t; ++i) edges.push_back({2 * i, 2 * i + 1});
  auto bits = [&](int block) {
    std::vector<int> v;
    for (int g = 0; g < k; ++g)
      for (int bit = 0; bit < t; ++bit)
        for (int w = 0; w < 2; ++w) v.push_back(bitv(block, g, bit, w));
    return v;
  };
  PathDecomposition pd;
  long long gadget_total = 0;
  for (const auto& sat : s.satisfying) {
    size_t l = sat.size() + (sat.size() % 2);
    gadget_total += static_cast<long long>(l) + 2;
  }
  if (r == 1) pd.bags.push_back(bits(0));
  for (int i = 0; i + 1 < r; ++i) {
    auto base = bits(i);
    auto more = bits(i + 1);
    base.insert(base.end(), more.begin(), more.end());
    for (const auto& sat0 : s.satisfying) {
      auto sat = sat0;
      if (sat.size() % 2 == 1) sat.push_back(sat.back());
      const int l = static_cast<int>(sat.size());
      std::vector<int> p(l + 2), pp(l + 1), v(l + 1);
      for (int j = 0; j <= l + 1; ++j) p[j] = n++;
      for (int j = 1; j <= l; ++j) pp[j] = n++;
      for (int j = 1; j <= l; ++j) v[j] = n++;
      for (int j = 0; j <= l; ++j) edges.push_back({p[j], p[j + 1]});
      for (int j = 1; j < l; ++j) edges.push_back({pp[j], pp[j + 1]});
      for (int j = 1; j <= l; ++j) {
        if (mutant != 1) edges.push_back({p[j], pp[j]});
        edges.push_back({v[j], p[j]});
        edges.push_back({v[j], pp[j]});
        const auto& y = sat[j - 1];
        for (int bit = 0; bit < t; ++bit) {
          int value = (y[2] >> (t - 1 - bit)) & 1;
          edges.push_back({v[j], bitv(i + y[0], y[1], bit, 1 - value)});
        }
      }
      auto bag = [&](std::initializer_list<int> extra) {
        auto b = base;
        b.insert(b.end(), extra);
        pd.bags.push_back(b);
      };
      if (l == 0) {
        bag({p[0], p[1]});
        continue;
      }
      bag({p[0], p[1], pp[1], v[1]});
      for (int j = 2; j <= l; ++j) bag({p[j - 1], pp[j - 1], v[j - 1], p[j], pp[j], v[j]});
      bag({p[l], pp[l], v[l], p[l + 1]});
    }
    if (s.satisfying.empty()) pd.bags.push_back(base);
  }
  for (auto& b : pd.bags) std::sort(b.begin(), b.end());
  PathwidthVertexInstance out;
  out.graph = make_graph(n, edges);
  out.pd = pd;
  out.problem = VertexProblem::IndependentSet;
  out.K = static_cast<int>(static_cast<long long>(r) * k * t + (r - 1) * gadget_total);
  ReductionOutput res;
  res.parameter = pd_width(out.pd);
  res.constants = {{"t", t}, {"clauses", s.clauses.size()}, {"K", out.K}, {"width_bound", 4 * k * t + 6}};
  res.target = std::move(out);
  return res;
}

ReductionOutput log_pw_clique_to_weighted_cnf(const PathwidthVertexInstance& inst, int mutant) {
  require_valid(inst);
  if (inst.problem != VertexProblem::Clique)
    throw ValidationError("the weighted CNF encoding expects a clique instance");
  const auto mat = adjacency_matrix(inst.graph);
  const int n = inst.graph.n;
  int g = 0;
  while ((2LL << g) <= n) ++g;
  g = std::max(g, 1);
  auto bags = inst.pd.bags;
  if (bags.empty()) bags.push_back({});
  int kk = 1;
  for (const auto& b : bags) kk = std::max(kk, static_cast<int>((b.size() + g - 1) / g));
  const int K = inst.K;

  int next = 0;
  auto fresh = [&] { return ++next; };
  std::vector<int> bvar(bags.size());
  for (auto& v : bvar) v = fresh();
  // cvars[i][j] lists (variable, subset) pairs.
  std::vector<std::vector<std::vector<std::pair<int, std::vector<int>>>>> cvars(bags.size());
  for (size_t i = 0; i < bags.size(); ++i) {
    auto bag = bags[i];
    std::sort(bag.begin(), bag.end());
    cvars[i].resize(kk);
    for (int j = 0; j < kk; ++j) {
      std::vector<int> grp;
      for (size_t p = static_cast<size_t>(j) * g; p < bag.size() && p < static_cast<size_t>(j + 1) * g; ++p)
        grp.push_back(bag[p]);
      for (int mask = 0; mask < (1 << grp.size()); ++mask) {
        std::vector<int> sub;
        for (size_t p = 0; p < grp.size(); ++p)
          if (mask >> p & 1) sub.push_back(grp[p]);
        if (is_clique(mat, sub)) cvars[i][j].push_back({fresh(), sub});
      }
    }
  }
  std::vector<std::vector<int>> tvar(kk + 1, std::vector<int>(K + 1, 0));
  tvar[0][0] = fresh();
  for (int j = 1; j <= kk; ++j)
    for (int q = 0; q <= K; ++q) tvar[j][q] = fresh();

  Cnf f;
  f.push_back(Clause(bvar.begin(), bvar.end()));
  for (size_t i = 0; i < bags.size(); ++i)
    for (int j = 0; j < kk; ++j) {
      Clause some{-bvar[i]};
      for (const auto& [v, sub] : cvars[i][j]) {
        f.push_back({bvar[i], -v});
        some.push_back(v);
      }
      f.push_back(some);
    }
  if (mutant != 1)
    for (size_t i = 0; i < bags.size(); ++i)
      for (int j = 0; j < kk; ++j)
        for (int j2 = j + 1; j2 < kk; ++j2)
          for (const auto& [v1, s1] : cvars[i][j])
            for (const auto& [v2, s2] : cvars[i][j2]) {
              std::vector<int> u = s1;
              u.insert(u.end(), s2.begin(), s2.end());
              if (!is_clique(mat, u)) f.push_back({-v1, -v2});
            }
  f.push_back({tvar[0][0]});
  f.push_back({tvar[kk][K]});
  for (int j = 1; j <= kk; ++j) f.push_back(Clause(tvar[j].begin(), tvar[j].end()));
  for (int j = 1; j <= kk; ++j)
    for (size_t i = 0; i < bags.size(); ++i)
      for (const auto& [v, sub] : cvars[i][j - 1])
        for (int q = 0; q <= (j == 1 ? 0 : K); ++q)
          for (int q2 = 0; q2 <= K; ++q2)
            if (q + static_cast<int>(sub.size()) != q2) f.push_back({-tvar[j - 1][q], -v, -tvar[j][q2]});

  ChainedCnf out;
  out.r = 1;
  out.q = next;
  out.k = 2 * kk + 2;
  out.first = std::move(f);
  ReductionOutput res;
  res.parameter = out.k;
  res.constants = {{"group_size", g}, {"groups", kk}, {"variables", next}, {"k", out.k}};
  res.target = std::move(out);
  return res;
}

}  // namespace xnlp
