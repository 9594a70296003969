#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "xnlp/core.hpp"

namespace xnlp {

enum class Acceptance { OneAccepting, AllAccepting, NonHalting };

struct CellularAutomaton {
  int num_states = 0;
  int left = 0;   // boundary state of cell 1
  int right = 1;  // boundary state of cell q
  std::vector<std::array<int, 4>> transitions;
  std::vector<int> accepting;  // sorted
  std::vector<int> initial;    // configuration, length q
  int t = 1;
  Acceptance acceptance = Acceptance::OneAccepting;
  std::vector<std::string> state_names;  // optional

  int q() const { return static_cast<int>(initial.size()); }
};

using Clause = std::vector<int>;
using Cnf = std::vector<Clause>;

// r blocks of q variables. Junction i (0-based, i < r-1) holds clauses over
// X_i and X_{i+1} with local literals: 1..q address X_i, q+1..2q address
// X_{i+1}. `first` and `last` constrain X_0 and X_{r-1} with literals 1..q.
struct ChainedCnf {
  int r = 1;
  int q = 0;
  int k = 0;
  std::vector<Cnf> junctions;
  Cnf first;
  Cnf last;
  bool positive = false;
  bool regular = false;
  std::vector<std::vector<int>> partition;  // 0-based local indices, shared by all blocks
};

enum class ChainedVariant { Clique, IndependentSet };

struct LayeredGraph {
  Graph graph;
  int r = 1;
  int k = 1;
  std::vector<int> layer;  // 1..r
  std::vector<int> color;  // 1..k
  ChainedVariant variant = ChainedVariant::Clique;
};

struct Check {
  int c1 = 1, c2 = 1, r1 = 0, r2 = 0;
  bool operator==(const Check&) const = default;
};

struct Nnccm {
  int k = 1;
  int n = 0;
  std::vector<Check> checks;
};

struct ListColoringInstance {
  Graph graph;
  PathDecomposition pd;
  std::vector<std::vector<int>> lists;  // sorted colors per vertex
  std::vector<int> precolored;          // empty, or per vertex a color or -1
};

enum class VertexProblem { DominatingSet, IndependentSet, Clique };

struct PathwidthVertexInstance {
  Graph graph;
  PathDecomposition pd;
  VertexProblem problem = VertexProblem::DominatingSet;
  int K = 0;
};

struct SchedulingInstance {
  int num_tasks = 0;
  std::vector<std::pair<int, int>> prec;
  int machines = 1;
  int deadline = 1;
};

struct UniformEmulationInstance {
  int m = 1;
  int c = 1;
  std::vector<int> weights;  // w(1..n)
};

struct BandwidthInstance {
  Graph graph;
  int k = 0;
};

enum class SetKind { DominatingSet, IndependentSet, Clique };
enum class MoveRule { TokenSliding, TokenJumping };

struct ReconfigurationInstance {
  Graph graph;
  SetKind kind = SetKind::DominatingSet;
  MoveRule rule = MoveRule::TokenJumping;
  std::vector<int> start;   // sorted
  std::vector<int> target;  // sorted
  int tokens = 0;
  int T = 1;            // number of sets in the sequence
  bool exact = false;   // exactly T sets instead of at most T
};

struct Dfa {
  int states = 0;
  int start = 0;
  std::vector<int> delta;      // states * alphabet
  std::vector<int> accepting;  // sorted
};

struct DfaCollection {
  int alphabet = 0;
  std::string symbols;  // optional display names, size alphabet
  std::vector<Dfa> automata;
  bool acyclic = false;
};

struct LcsInstance {
  std::vector<std::string> strings;
  int m = 0;
};

using Instance =
    std::variant<CellularAutomaton, ChainedCnf, LayeredGraph, Nnccm, ListColoringInstance,
                 PathwidthVertexInstance, SchedulingInstance, UniformEmulationInstance,
                 BandwidthInstance, ReconfigurationInstance, DfaCollection, LcsInstance>;

std::string kind_name(const Instance& inst);
long long parameter_of(const Instance& inst);

std::vector<std::string> validate(const CellularAutomaton& ca);
std::vector<std::string> validate(const ChainedCnf& c);
std::vector<std::string> validate(const LayeredGraph& g);
std::vector<std::string> validate(const Nnccm& m);
std::vector<std::string> validate(const ListColoringInstance& inst);
std::vector<std::string> validate(const PathwidthVertexInstance& inst);
std::vector<std::string> validate(const SchedulingInstance& inst);
std::vector<std::string> validate(const UniformEmulationInstance& inst);
std::vector<std::string> validate(const BandwidthInstance& inst);
std::vector<std::string> validate(const ReconfigurationInstance& inst);
std::vector<std::string> validate(const DfaCollection& d);
std::vector<std::string> validate(const LcsInstance& inst);
std::vector<std::string> validate(const Instance& inst);

// Throws ValidationError carrying the first diagnostic.
template <class T>
void require_valid(const T& inst) {
  auto diags = validate(inst);
  if (!diags.empty()) throw ValidationError(diags.front());
}

// Transitive closure as a reachability matrix; throws on cycles.
std::vector<std::vector<char>> transitive_closure(int n, const std::vector<std::pair<int, int>>& dag);
int poset_width(int n, const std::vector<std::pair<int, int>>& dag);
int poset_width_exhaustive(int n, const std::vector<std::pair<int, int>>& dag);
int poset_width_matching(int n, const std::vector<std::pair<int, int>>& dag);

// Set predicates shared by solvers and checkers.
bool is_dominating(const std::vector<std::vector<int>>& adj, const std::vector<int>& set);
bool is_independent(const std::vector<std::vector<char>>& mat, const std::vector<int>& set);
bool is_clique(const std::vector<std::vector<char>>& mat, const std::vector<int>& set);
bool satisfies_kind(const Graph& g, SetKind kind, const std::vector<int>& set);

// Effective lists with precolored vertices shrunk to their fixed color.
std::vector<std::vector<int>> effective_lists(const ListColoringInstance& inst);

}  // namespace xnlp
