#include <algorithm>

#include "xnlp/reductions.hpp"

namespace xnlp {

namespace {

enum class CheckShape { Regular, SameCounter, Never };

// A check on one counter either tests a single value or can never reject.
CheckShape shape(const Check& s) {
  if (s.c1 != s.c2) return CheckShape::Regular;
  return s.r1 == s.r2 ? CheckShape::SameCounter : CheckShape::Never;
}

}  // namespace

ReductionOutput nnccm_to_scheduling(const Nnccm& m, int mutant) {
  require_valid(m);
  const long long k = m.k, n = m.n, r = static_cast<long long>(m.checks.size());
  const long long K = 2 * k + 1;
  const long long c = (k * n + 1) * (n + 1);
  const long long D = c * r + n + 1;
  if (D > 2'000'000) throw ResourceError("scheduling instance would exceed two million time steps");

  std::vector<std::pair<int, int>> prec;
  int tasks = 0;
  auto task = [&] { return tasks++; };
  std::vector<int> a(D + 1);
  for (long long t = 1; t <= D; ++t) a[t] = task();
  for (long long t = 1; t < D; ++t) prec.push_back({a[t], a[t + 1]});
  std::vector<std::vector<int>> chain(k + 1, std::vector<int>(D - n + 1));
  for (long long i = 1; i <= k; ++i) {
    for (long long t = 1; t <= D - n; ++t) chain[i][t] = task();
    for (long long t = 1; t < D - n; ++t) prec.push_back({chain[i][t], chain[i][t + 1]});
  }
  auto pin = [&](int b, long long t) {
    if (t > 1) prec.push_back({a[t - 1], b});
    if (t < D) prec.push_back({b, a[t + 1]});
  };
  auto parallel = [&](long long i, long long pos) {
    int d = task();
    if (pos > 1) prec.push_back({chain[i][pos - 1], d});
    if (pos < D - n) prec.push_back({d, chain[i][pos + 1]});
  };
  for (long long j = 1; j <= r; ++j) {
    const Check& s = m.checks[j - 1];
    for (long long alpha = 0; alpha <= k * n; ++alpha) {
      const long long t = (j - 1) * c + alpha * (n + 1) + n + 1;
      for (long long x = 1; x < k; ++x) pin(task(), t);
      switch (shape(s)) {
        case CheckShape::Regular:
          parallel(s.c1, t - s.r1);
          if (mutant != 1) parallel(s.c2, t - s.r2);
          break;
        case CheckShape::SameCounter:
          // One more indicator leaves no free machine for the check task.
          if (mutant != 1) pin(task(), t);
          parallel(s.c1, t - s.r1);
          break;
        case CheckShape::Never:
          break;
      }
    }
  }
  SchedulingInstance out;
  out.num_tasks = tasks;
  out.prec = std::move(prec);
  out.machines = static_cast<int>(K);
  out.deadline = static_cast<int>(D);
  ReductionOutput res;
  res.parameter = parameter_of(Instance{out});
  res.constants = {{"c", c}, {"D", D}, {"machines", K}, {"width_bound", 3 * (k + 1)}};
  res.target = std::move(out);
  return res;
}

EmulationConstants emulation_constants(long long k, long long n, long long r) {
  EmulationConstants e{};
  e.d1 = 3 * k + 2;
  e.d2 = k * e.d1 + 1;
  e.d3 = k * e.d2 + 1;
  e.c = 2 * k * e.d3 + 1;
  e.n0 = 3 * n + 1;
  e.M = 1 + (r + 1) * e.n0;
  return e;
}

ReductionOutput nnccm_to_uniform_emulation(const Nnccm& m, int mutant) {
  require_valid(m);
  // Below three counters a left turning point (d2) fits next to a plain floor
  // vertex (room 3*d1), so unchecked counters are added up to three.
  const long long k = std::max(m.k, 3);
  const long long n = m.n, r = static_cast<long long>(m.checks.size());
  const auto e = emulation_constants(k, n, r);
  const long long M = e.M;
  if (M * e.c > 5'000'000) throw ResourceError("uniform emulation instance would be too large");

  std::vector<long long> w;
  w.push_back(e.c - k * e.d2);
  for (long long i = 2; i <= M - 1; ++i) {
    long long weight = e.c - 3 * e.d1;
    if ((i - 1) % e.n0 == 0) {
      long long j = (i - 1) / e.n0;
      weight = e.c - 2 * e.d1 + 1;
      if (j >= 1 && j <= r && shape(m.checks[j - 1]) == CheckShape::SameCounter && mutant != 1)
        weight = e.c - e.d1 + 1;
    }
    w.push_back(weight);
  }
  w.push_back(e.c - k * e.d3 - 1);
  const long long heavy = mutant == 1 ? 1 : e.d1;
  for (long long q = 1; q <= k; ++q) {
    for (long long i = 0; i < M - 2; ++i) w.push_back(1);
    w.push_back(e.d2);
    std::vector<long long> main(M - 2 + n + 1, 1);  // 1-based
    for (long long j = 1; j <= r; ++j) {
      const Check& s = m.checks[j - 1];
      if (shape(s) == CheckShape::Never) continue;
      if (s.c1 == q) main[e.n0 * j + s.r1] = heavy;
      if (s.c2 == q) main[e.n0 * j + s.r2] = heavy;
    }
    w.insert(w.end(), main.begin() + 1, main.end());
    w.push_back(e.d3);
  }
  long long total = 0;
  for (long long x : w) total += x;
  const long long filler = M * e.c - total;
  if (filler < 0) throw ValidationError("uniform emulation weights exceed M*c");
  for (long long i = 0; i < filler; ++i) w.push_back(1);

  UniformEmulationInstance out;
  out.m = static_cast<int>(M);
  out.c = static_cast<int>(e.c);
  out.weights.assign(w.begin(), w.end());
  ReductionOutput res;
  res.parameter = out.c;
  res.constants = {{"counters", k}, {"d1", e.d1}, {"d2", e.d2}, {"d3", e.d3}, {"c", e.c},
                   {"n0", e.n0},    {"M", M},     {"filler", filler}};
  res.target = std::move(out);
  return res;
}

}  // namespace xnlp
