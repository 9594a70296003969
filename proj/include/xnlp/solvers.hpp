#pragma once

#include <cstdint>
#include <string>

#include "xnlp/json_io.hpp"

namespace xnlp {

enum class SolveMode { Exhaustive, Structured };

struct Answer {
  bool decision = false;
  Json certificate;  // null when decision is false
};

Json answer_to_json(const Answer& a);

Answer solve_cellular_automaton(const CellularAutomaton& ca, SolveMode mode,
                                std::uint64_t budget = kDefaultBudget);
Answer solve_chained_cnf(const ChainedCnf& c, SolveMode mode, std::uint64_t budget = kDefaultBudget);
Answer solve_chained_clique(const LayeredGraph& g, SolveMode mode,
                            std::uint64_t budget = kDefaultBudget);
Answer solve_nnccm(const Nnccm& m, SolveMode mode, std::uint64_t budget = kDefaultBudget);
Answer solve_list_coloring(const ListColoringInstance& inst, SolveMode mode,
                           std::uint64_t budget = kDefaultBudget);
Answer solve_pathwidth_vertex_problem(const PathwidthVertexInstance& inst, SolveMode mode,
                                      std::uint64_t budget = kDefaultBudget);
Answer solve_scheduling(const SchedulingInstance& inst, SolveMode mode,
                        std::uint64_t budget = kDefaultBudget);
Answer solve_uniform_emulation(const UniformEmulationInstance& inst, SolveMode mode,
                               std::uint64_t budget = kDefaultBudget);
Answer solve_bandwidth(const BandwidthInstance& inst, SolveMode mode,
                       std::uint64_t budget = kDefaultBudget);
Answer solve_reconfiguration(const ReconfigurationInstance& inst, SolveMode mode,
                             std::uint64_t budget = kDefaultBudget);
Answer solve_fsa_intersection(const DfaCollection& d, SolveMode mode,
                              std::uint64_t budget = kDefaultBudget);
Answer solve_lcs(const LcsInstance& inst, SolveMode mode, std::uint64_t budget = kDefaultBudget);

// Dispatches on the instance kind after validation.
Answer solve(const Instance& inst, SolveMode mode, std::uint64_t budget = kDefaultBudget);

// True iff the certificate witnesses a YES answer. Throws ValidationError when
// the certificate does not have the shape the kind expects.
bool check_certificate(const Instance& inst, const Json& certificate);

}  // namespace xnlp
