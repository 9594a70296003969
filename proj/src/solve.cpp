#include "xnlp/solvers.hpp"

namespace xnlp {

Answer solve(const Instance& inst, SolveMode mode, std::uint64_t budget) {
  require_valid(inst);
  struct V {
    SolveMode mode;
    std::uint64_t budget;
    Answer operator()(const CellularAutomaton& x) const { return solve_cellular_automaton(x, mode, budget); }
    Answer operator()(const ChainedCnf& x) const { return solve_chained_cnf(x, mode, budget); }
    Answer operator()(const LayeredGraph& x) const { return solve_chained_clique(x, mode, budget); }
    Answer operator()(const Nnccm& x) const { return solve_nnccm(x, mode, budget); }
    Answer operator()(const ListColoringInstance& x) const { return solve_list_coloring(x, mode, budget); }
    Answer operator()(const PathwidthVertexInstance& x) const {
      return solve_pathwidth_vertex_problem(x, mode, budget);
    }
    Answer operator()(const SchedulingInstance& x) const { return solve_scheduling(x, mode, budget); }
    Answer operator()(const UniformEmulationInstance& x) const {
      return solve_uniform_emulation(x, mode, budget);
    }
    Answer operator()(const BandwidthInstance& x) const { return solve_bandwidth(x, mode, budget); }
    Answer operator()(const ReconfigurationInstance& x) const { return solve_reconfiguration(x, mode, budget); }
    Answer operator()(const DfaCollection& x) const { return solve_fsa_intersection(x, mode, budget); }
    Answer operator()(const LcsInstance& x) const { return solve_lcs(x, mode, budget); }
  };
  return std::visit(V{mode, budget}, inst);
}

}  // namespace xnlp
