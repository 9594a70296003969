#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xnlp/reductions.hpp"

namespace xnlp {

// Exhaustive, duplicate-free listing in a fixed order. Supported kinds:
// bandwidth {n, k}, nnccm {k, n, r}, chained-cnf {r, q, k, clauses, literals},
// lcs {strings, length, alphabet, m}. Throws ResourceError when the stream
// would exceed `limit` instances.
std::vector<Instance> enumerate_instances(const std::string& kind, const Json& bounds,
                                          std::size_t limit = 1'000'000);

// Deterministic in (kind, seed, params); the result passes validate.
Instance random_instance(const std::string& kind, std::uint64_t seed, const Json& params = Json::object());

struct OracleVerdict {
  bool decided = false;
  bool decision = false;
  std::string mode;  // "exhaustive", "structured" or "skipped"
};

// Exhaustive solver first; the structured solver when that runs out of budget.
OracleVerdict oracle(const Instance& inst, std::uint64_t budget);

struct ReductionReport {
  std::string id;
  int mutant = 0;
  long long tried = 0;
  long long agreements = 0;
  long long disagreements = 0;
  long long skipped = 0;
  long long yes_sources = 0;  // decided pairs whose source answer is YES
  long long bound_violations = 0;
  long long constant_mismatches = 0;
  long long invalid_targets = 0;
  std::optional<Json> counterexample;  // first disagreement
  std::optional<Json> first_failure;   // first bound, constant or validity failure
  double wall_ms = 0;

  bool sound() const {
    return disagreements == 0 && bound_violations == 0 && constant_mismatches == 0 && invalid_targets == 0;
  }
};

Json report_to_json(const ReductionReport& r, bool timing = true);
std::string report_table(const std::vector<ReductionReport>& reports, bool timing = true);

ReductionReport verify_reduction(const std::string& id, const std::vector<Instance>& stream,
                                 std::uint64_t budget = kDefaultBudget, int mutant = 0);

// Constants of a reduction output recomputed from the source alone. Only the
// keys listed here are compared.
Json expected_constants(const std::string& id, const Instance& source);

using GTable = std::map<std::string, std::function<long long(const Instance&)>>;
GTable default_g_table();
// Throws UsageError for ids missing from the table or the registry.
bool check_parameter_bound(const std::string& id, const Instance& source, const GTable& g_table);

// Per-reduction stream sizes and generator parameters.
Json default_manifest();
std::vector<Instance> source_stream(const std::string& id, const Json& manifest);
std::uint64_t manifest_budget(const Json& manifest);

// Vertex separation path decomposition for a given vertex order.
PathDecomposition pd_from_order(const Graph& g, const std::vector<int>& order);

}  // namespace xnlp
