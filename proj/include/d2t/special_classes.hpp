#pragma once

#include <optional>
#include <vector>

#include "d2t/graph.hpp"
#include "d2t/solver.hpp"

namespace d2t {

// a graph together with a certified two-sided partition; every edge runs
// between side_x and side_y
struct BipartiteView {
  Graph graph;
  VertexSet side_x;
  VertexSet side_y;
};

// per-side orderings whose neighborhoods shrink along the order:
// N(order[i+1]) is a subset of N(order[i])
struct ChainOrdering {
  std::vector<int> order_x;
  std::vector<int> order_y;
};

struct SplitDecomposition {
  VertexSet clique;
  VertexSet independent;  // may be empty
};

// two-coloring by BFS; the lowest vertex of each component takes side X.
// nullopt on odd cycles.
std::optional<BipartiteView> recognize_bipartite(const Graph& g);

// degree-prefix candidate clique, then a definition check; false
// positives are impossible
std::optional<SplitDecomposition> recognize_split(const Graph& g);

// sorts each side by non-increasing degree (ties by id) and verifies the
// nesting; nullopt when the view is not a chain graph
std::optional<ChainOrdering> chain_ordering(const BipartiteView& b);

// with a star on side X centered at `center`, checks that every right
// vertex's neighborhood induces a subtree: it contains the center or has
// at most one vertex. center must lie in X.
bool verify_star_convex(const BipartiteView& b, int center);

// smallest center in X making the view star-convex, trying every
// candidate; nullopt when none works
std::optional<int> find_star_center(const BipartiteView& b);

struct ComplementBipartiteResult {
  int value = 0;         // d2 value of the complement graph of b
  int matching_size = 0; // t = min(|full_x|, |full_y|)
  VertexSet full_x;      // X vertices adjacent to all of Y
  VertexSet full_y;      // Y vertices adjacent to all of X
};

// d2 value of complement(b.graph), straight from the degree profile of b:
// value = |X| + |Y| - t. The complement is never materialized; both sides
// must be non-empty.
ComplementBipartiteResult d2_of_complement_bipartite(const BipartiteView& b);

// the bipartite chain graph H with square(b.graph) = complement(H):
// same sides, cross edges complemented. b must be connected and chain;
// H's chain orderings are ord reversed and H may have isolated vertices.
BipartiteView chain_square_complement(const BipartiteView& b,
                                      const ChainOrdering& ord);

// d2 value of a connected bipartite chain graph, via the square =
// complement-of-chain structure; the transitive solver finishes the job
int d2_of_chain(const BipartiteView& b, const SolverConfig& cfg = {});

}  // namespace d2t
