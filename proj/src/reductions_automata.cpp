#include <algorithm>
#include <set>

#include "xnlp/reductions.hpp"

namespace xnlp {

ReductionOutput ca_annotate_time(const CellularAutomaton& ca, int mutant) {
  require_valid(ca);
  if (ca.acceptance != Acceptance::AllAccepting)
    throw ValidationError("time annotation expects the all-accepting flavor");
  std::vector<int> interior;
  std::vector<int> index(ca.num_states, -1);
  for (int s = 0; s < ca.num_states; ++s)
    if (s != ca.left && s != ca.right) {
      index[s] = static_cast<int>(interior.size());
      interior.push_back(s);
    }
  const int I = static_cast<int>(interior.size());
  const int t = ca.t;
  auto at = [&](int s, int time) {
    if (s == ca.left) return 0;
    if (s == ca.right) return 1;
    return 2 + time * I + index[s];
  };
  const int sink = 2 + (t + 1) * I;

  CellularAutomaton out;
  out.num_states = sink + 1;
  out.left = 0;
  out.right = 1;
  out.t = t + 1;
  out.acceptance = Acceptance::NonHalting;
  out.accepting = {sink};
  for (int s : ca.initial) out.initial.push_back(at(s, 0));
  for (int time = 0; time < t; ++time)
    for (const auto& z : ca.transitions)
      out.transitions.push_back({at(z[0], time), at(z[1], time), at(z[2], time), at(z[3], time + 1)});
  // Cells in an accepting state at time t may take one more step into the sink.
  std::vector<int> neighbours{0, 1};
  for (int s : interior) neighbours.push_back(at(s, t));
  for (int s : interior) {
    bool acc = std::binary_search(ca.accepting.begin(), ca.accepting.end(), s);
    if (!acc && mutant != 1) continue;
    for (int x : neighbours)
      for (int y : neighbours) out.transitions.push_back({x, at(s, t), y, sink});
  }
  std::sort(out.transitions.begin(), out.transitions.end());
  if (!ca.state_names.empty()) {
    out.state_names.assign(out.num_states, "");
    out.state_names[0] = ca.state_names[ca.left];
    out.state_names[1] = ca.state_names[ca.right];
    for (int time = 0; time <= t; ++time)
      for (int s : interior) out.state_names[at(s, time)] = ca.state_names[s] + "@" + std::to_string(time);
    out.state_names[sink] = "sink";
  }
  ReductionOutput r;
  r.parameter = out.q();
  r.constants = {{"states", out.num_states}, {"t", out.t}};
  r.target = std::move(out);
  return r;
}

ReductionOutput ca_to_chained_sat(const CellularAutomaton& ca, int mutant) {
  require_valid(ca);
  if (ca.acceptance != Acceptance::OneAccepting)
    throw ValidationError("the chained CNF encoding expects the one-accepting flavor");
  const int q = ca.q();
  const int S = ca.num_states;
  const int T = static_cast<int>(ca.transitions.size());
  const int inner = std::max(q - 2, 0);
  const int block = q * S + inner * T;
  // Local literals, 1-based; `next` shifts into the second block of a junction.
  auto x = [&](int cell, int s, bool next = false) { return cell * S + s + 1 + (next ? block : 0); };
  auto y = [&](int cell, int z) { return q * S + (cell - 1) * T + z + 1; };

  ChainedCnf out;
  out.r = ca.t + 1;
  out.q = block;
  out.k = 2 * q - 2;
  out.regular = true;

  auto at_least_one_state = [&](Cnf& f, bool next) {
    for (int cell = 0; cell < q; ++cell) {
      Clause c;
      for (int s = 0; s < S; ++s) c.push_back(x(cell, s, next));
      f.push_back(c);
    }
  };
  auto at_least_one_transition = [&](Cnf& f) {
    for (int cell = 1; cell + 1 < q; ++cell) {
      Clause c;
      for (int z = 0; z < T; ++z) c.push_back(y(cell, z));
      f.push_back(c);
    }
  };
  auto boundary = [&](Cnf& f, bool next) {
    f.push_back({x(0, ca.left, next)});
    f.push_back({x(q - 1, ca.right, next)});
  };

  for (int cell = 0; cell < q; ++cell) out.first.push_back({x(cell, ca.initial[cell])});
  boundary(out.first, false);
  at_least_one_state(out.first, false);

  Cnf f1;
  at_least_one_state(f1, true);
  at_least_one_transition(f1);
  boundary(f1, true);
  if (mutant != 1)
    for (int cell = 1; cell + 1 < q; ++cell)
      for (int s = 0; s < S; ++s) {
        Clause c{-x(cell, s, true)};
        for (int z = 0; z < T; ++z)
          if (ca.transitions[z][3] == s) c.push_back(y(cell, z));
        f1.push_back(c);
      }
  for (int cell = 1; cell + 1 < q; ++cell)
    for (int z = 0; z < T; ++z) {
      const auto& tr = ca.transitions[z];
      for (int d = 0; d < 3; ++d) f1.push_back({-y(cell, z), x(cell - 1 + d, tr[d])});
    }
  out.junctions.assign(out.r - 1, f1);

  Clause accept;
  for (int cell = 0; cell < q; ++cell)
    for (int s : ca.accepting) accept.push_back(x(cell, s));
  out.last.push_back(accept);
  at_least_one_transition(out.last);

  if (T > 0 || q == 2) {
    for (int cell = 0; cell < q; ++cell) {
      std::vector<int> g;
      for (int s = 0; s < S; ++s) g.push_back(x(cell, s) - 1);
      out.partition.push_back(g);
    }
    for (int cell = 1; cell + 1 < q; ++cell) {
      std::vector<int> g;
      for (int z = 0; z < T; ++z) g.push_back(y(cell, z) - 1);
      out.partition.push_back(g);
    }
  }
  ReductionOutput r;
  r.parameter = out.k;
  r.constants = {{"block_size", block}, {"blocks", out.r}, {"k", out.k}};
  r.target = std::move(out);
  return r;
}

ReductionOutput lcs_to_acyclic_fsa(const LcsInstance& inst, int mutant) {
  require_valid(inst);
  std::set<char> chars;
  for (const auto& s : inst.strings) chars.insert(s.begin(), s.end());
  std::string symbols(chars.begin(), chars.end());
  if (symbols.empty()) symbols = "a";
  const int A = static_cast<int>(symbols.size());

  DfaCollection out;
  out.alphabet = A;
  out.symbols = symbols;
  out.acyclic = true;

  const int m = (mutant == 1 && inst.m > 0) ? inst.m - 1 : inst.m;
  Dfa len;
  len.states = m + 1;
  for (int i = 0; i <= m; ++i)
    for (int a = 0; a < A; ++a) len.delta.push_back(std::min(i + 1, m));
  len.accepting = {m};
  out.automata.push_back(len);

  for (const auto& s : inst.strings) {
    const int t = static_cast<int>(s.size());
    const int reject = t + 1;
    Dfa d;
    d.states = t + 2;
    for (int j = 0; j <= t + 1; ++j)
      for (int a = 0; a < A; ++a) {
        int to = reject;
        if (j <= t) {
          if (mutant == 2) {
            for (int p = t; p > j; --p)
              if (s[p - 1] == symbols[a]) {
                to = p;
                break;
              }
          } else {
            for (int p = j + 1; p <= t; ++p)
              if (s[p - 1] == symbols[a]) {
                to = p;
                break;
              }
          }
        }
        d.delta.push_back(to);
      }
    for (int j = 0; j <= t; ++j) d.accepting.push_back(j);
    out.automata.push_back(d);
  }
  ReductionOutput r;
  r.parameter = static_cast<long long>(out.automata.size());
  r.constants = {{"automata", out.automata.size()}, {"length_states", inst.m + 1}};
  r.target = std::move(out);
  return r;
}

ReductionOutput fsa_binarize(const DfaCollection& d, int mutant) {
  require_valid(d);
  int width = 1;
  while ((1 << width) < d.alphabet) ++width;
  const int padded = 1 << width;

  DfaCollection out;
  out.alphabet = 2;
  out.symbols = "01";
  out.acyclic = d.acyclic;
  for (const auto& m : d.automata) {
    Dfa b;
    b.start = m.start;
    b.accepting = m.accepting;
    std::vector<std::vector<int>> delta(m.states, std::vector<int>(2, -1));
    auto sink = [&](int s) {
      for (int a = 0; a < d.alphabet; ++a)
        if (m.delta[static_cast<size_t>(s) * d.alphabet + a] != s) return false;
      return true;
    };
    int reject = -1;
    auto reject_state = [&] {
      if (reject < 0) {
        reject = static_cast<int>(delta.size());
        delta.push_back({reject, reject});
      }
      return reject;
    };
    for (int s = 0; s < m.states; ++s) {
      if (sink(s)) {
        delta[s] = {s, s};
        continue;
      }
      for (int a = 0; a < d.alphabet; ++a)
        if (m.delta[static_cast<size_t>(s) * d.alphabet + a] == s) out.acyclic = false;
      // Decoding tree: node for prefix p at depth h, root is the state itself.
      std::vector<int> level{s};
      for (int h = 1; h < width; ++h) {
        std::vector<int> next;
        for (int node : level)
          for (int bit = 0; bit < 2; ++bit) {
            int id = static_cast<int>(delta.size());
            delta.push_back({-1, -1});
            delta[node][bit] = id;
            next.push_back(id);
          }
        level = std::move(next);
      }
      for (size_t p = 0; p < level.size(); ++p)
        for (int bit = 0; bit < 2; ++bit) {
          int code = static_cast<int>(p) * 2 + bit;
          delta[level[p]][bit] =
              code < d.alphabet ? m.delta[static_cast<size_t>(s) * d.alphabet + code] : reject_state();
        }
      if (mutant == 1)
        for (size_t node = m.states; node < delta.size(); ++node)
          if (static_cast<int>(node) != reject) b.accepting.push_back(static_cast<int>(node));
    }
    b.states = static_cast<int>(delta.size());
    for (const auto& row : delta) b.delta.insert(b.delta.end(), row.begin(), row.end());
    std::sort(b.accepting.begin(), b.accepting.end());
    b.accepting.erase(std::unique(b.accepting.begin(), b.accepting.end()), b.accepting.end());
    out.automata.push_back(std::move(b));
  }
  ReductionOutput r;
  r.parameter = static_cast<long long>(out.automata.size());
  r.constants = {{"width", width}, {"padded_alphabet", padded}};
  r.target = std::move(out);
  return r;
}

}  // namespace xnlp
