#pragma once

#include <string>
#include <vector>

#include "xnlp/json_io.hpp"

namespace xnlp {

struct ReductionOutput {
  Instance target;
  long long parameter = 0;
  Json constants = Json::object();
};

Json reduction_to_json(const ReductionOutput& out);

// Every reduction takes a `mutant` selector: 0 is the faithful construction,
// a positive value switches on one documented corruption used by the harness
// to show its streams can tell the difference.

ReductionOutput ca_annotate_time(const CellularAutomaton& ca, int mutant = 0);
ReductionOutput ca_to_chained_sat(const CellularAutomaton& ca, int mutant = 0);
ReductionOutput cnf_positivize(const ChainedCnf& c, int mutant = 0);
ReductionOutput cnf_regularize_ii(const ChainedCnf& c, int mutant = 0);
ReductionOutput chained_sat_to_list_coloring(const ChainedCnf& c, int mutant = 0);
ReductionOutput list_coloring_to_precoloring(const ListColoringInstance& inst, int mutant = 0);
ReductionOutput list_coloring_to_cmc(const ListColoringInstance& inst, int mutant = 0);
ReductionOutput partial_complement(const LayeredGraph& g, int mutant = 0);
ReductionOutput cmc_to_nnccm(const LayeredGraph& g, int mutant = 0);
ReductionOutput nnccm_to_scheduling(const Nnccm& m, int mutant = 0);
ReductionOutput nnccm_to_uniform_emulation(const Nnccm& m, int mutant = 0);
ReductionOutput chained_sat_to_log_pw_domset(const ChainedCnf& c, int mutant = 0);
ReductionOutput chained_sat_to_log_pw_indset(const ChainedCnf& c, int mutant = 0);
ReductionOutput log_pw_clique_to_weighted_cnf(const PathwidthVertexInstance& inst, int mutant = 0);
ReductionOutput chained_sat_to_ts_ds_reconfig(const ChainedCnf& c, int mutant = 0);
ReductionOutput ts_to_tj_timer(const ReconfigurationInstance& inst, int mutant = 0);
ReductionOutput cmc_to_tj_clique_reconfig(const LayeredGraph& g, int mutant = 0);
ReductionOutput reconfig_complement(const ReconfigurationInstance& inst, int mutant = 0);
ReductionOutput cmc_to_ts_clique_reconfig(const LayeredGraph& g, int mutant = 0);
ReductionOutput lcs_to_acyclic_fsa(const LcsInstance& inst, int mutant = 0);
ReductionOutput fsa_binarize(const DfaCollection& d, int mutant = 0);

// Constants of the uniform emulation construction for k counters, ceiling n
// and r checks.
struct EmulationConstants {
  long long d1, d2, d3, c, n0, M;
};
EmulationConstants emulation_constants(long long k, long long n, long long r);

struct ReductionInfo {
  std::string id;
  std::string source;  // kind accepted
  std::string target;  // kind produced
  std::string bound;   // g(k), human readable
  std::string summary;  // what the construction builds
  std::vector<std::string> mutants;  // description of mutant 1, 2, ...
};

const std::vector<ReductionInfo>& reduction_catalog();
const ReductionInfo& reduction_info(const std::string& id);  // throws UsageError

// Runs a reduction by id; throws ValidationError when the source kind or its
// preconditions do not fit.
ReductionOutput apply_reduction(const std::string& id, const Instance& source, int mutant = 0);

// Declared bound g on the emitted parameter, evaluated on the source.
long long parameter_bound(const std::string& id, const Instance& source);

}  // namespace xnlp
