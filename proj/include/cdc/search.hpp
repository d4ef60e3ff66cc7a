#pragma once

// Exact A_q[n, 2delta, l] by maximum clique search over the Grassmannian.

#include <chrono>
#include <cstdint>
#include <optional>

#include "cdc/bounds.hpp"
#include "cdc/code.hpp"

namespace cdc {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000;

struct SearchOptions {
  // Maximum number of vertices ([n l]_q) in the compatibility graph.
  std::uint64_t budget = kDefaultSearchBudget;
  // Restrict the optimum search to cliques through the first vertex, the
  // span of the first l unit vectors. Never applied to all-optima enumeration.
  bool symmetry_reduction = false;
};

struct SearchResult {
  CodeParams params;
  std::size_t optimum = 0;
  // Lexicographically least maximum clique, in vertex enumeration order.
  ConstantDimensionCode witness;
  // Set when all optima were enumerated.
  std::optional<bool> all_optima_steiner;
  std::optional<std::size_t> optima_count;
  std::size_t vertices = 0;
  std::size_t upper_bound = 0;  // best closed-form bound
  std::size_t lower_bound = 0;  // incumbent before search
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Graph: every l-subspace is a vertex; edges join pairs at distance
// >= 2*delta. The maximum clique size is found by branch and bound with
// greedy coloring, stopping early once it meets bound_report().best; the
// witness is then the first clique of that size in ascending vertex order.
// Throws BudgetExceeded when [n l]_q > options.budget.
SearchResult brute_force_optimum(const CodeParams& params, bool enumerate_all_optima,
                                 const SearchOptions& options = {});

struct DualityCheck {
  SearchResult primary;
  SearchResult dual;
  bool optima_equal = false;
  // dual_code of each witness is a valid code for the other orientation.
  bool witnesses_map = false;

  bool holds() const { return optima_equal && witnesses_map; }
};

// Compares A_q[n,2delta,l] with A_q[n,2delta,n-l]. Throws RangeError when
// n - l < delta.
DualityCheck verify_duality(const CodeParams& params, const SearchOptions& options = {});

}  // namespace cdc
