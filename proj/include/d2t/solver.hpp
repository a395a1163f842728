#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "d2t/graph.hpp"
#include "d2t/partition.hpp"

namespace d2t {

struct SolverConfig {
  enum class SearchOrder { upward, downward };

  int vertex_budget = 32;
  long long node_budget = 100'000'000;
  SearchOrder search_order = SearchOrder::upward;
};

struct SolveResult {
  int value = 0;
  OrderedPartition witness;
  long long nodes_explored = 0;
  Mode mode = Mode::transitive;
};

// Raised when the node budget runs out before the search settles. The
// solver never reports a possibly sub-optimal value as exact.
class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(long long nodes)
      : std::runtime_error("search inconclusive: node budget exhausted after " +
                           std::to_string(nodes) + " nodes"),
        nodes(nodes) {}

  long long nodes;
};

// (Delta+1, min(n, Delta^2+1)) window for the d2 value of a connected
// graph; throws on disconnected input
std::pair<int, int> degree_bounds(const Graph& g);

// maximum k admitting a transitive partition, with a witness
SolveResult exact_transitivity(const Graph& g, const SolverConfig& cfg = {});

// maximum k admitting a d2-transitive partition. Solved per component
// (the value of a disconnected graph is the best over its components);
// vertices of the non-optimal components are folded into the witness's
// first part.
SolveResult exact_d2_transitivity(const Graph& g, const SolverConfig& cfg = {});

// witness transitive partition with exactly k parts, or nullopt when none
// exists; 1 <= k <= n required
std::optional<OrderedPartition> feasible_transitive(const Graph& g, int k,
                                                    const SolverConfig& cfg = {});

// deterministic warm start: value <= Tr_d2(g), witness always valid, and
// at least Delta+1 on connected graphs
SolveResult greedy_d2_lower_bound(const Graph& g);

}  // namespace d2t
