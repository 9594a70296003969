#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xnlp {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Counts elementary steps of a search and throws once the limit is passed.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_)
      throw ResourceError("step budget of " + std::to_string(limit_) + " exceeded");
  }
  // Throws if a search space of the given size cannot possibly fit.
  void require(double steps, const std::string& what) const {
    if (steps > static_cast<double>(limit_ - used_))
      throw ResourceError(what + " needs about " + std::to_string(static_cast<long double>(steps)) +
                          " steps, budget is " + std::to_string(limit_));
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names;  // optional, empty or size n
};

// Normalizes endpoints to (min,max), sorts and removes duplicates and loops.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);
std::vector<std::vector<int>> adjacency_lists(const Graph& g);
std::vector<std::vector<char>> adjacency_matrix(const Graph& g);
Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
};

int pd_width(const PathDecomposition& pd);

std::vector<std::string> validate_graph(const Graph& g);
std::vector<std::string> validate_pd(const Graph& g, const PathDecomposition& pd);

}  // namespace xnlp
