#pragma once

#include <optional>
#include <vector>

#include "d2t/graph.hpp"

namespace d2t {

enum class Mode { transitive, d2 };

// Ordered list of disjoint non-empty vertex sets covering {0..n-1}.
// The order matters: part i must (d2-)dominate every later part.
struct OrderedPartition {
  std::vector<VertexSet> parts;
  int universe_size = 0;

  int size() const { return static_cast<int>(parts.size()); }
};

// throws std::invalid_argument unless parts are non-empty, pairwise
// disjoint and cover the graph's vertex set exactly
void validate_partition(const Graph& g, const OrderedPartition& p);

// true iff every vertex of b has a neighbor in a; a and b must be
// disjoint and non-empty
bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b);

// true iff every vertex of b is within distance two of some vertex of a,
// distances measured in the whole graph g
bool d2_dominates(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_transitive(const Graph& g, const OrderedPartition& p);
bool is_d2_transitive(const Graph& g, const OrderedPartition& p);

struct Violation {
  int part_a = 0;  // 1-based index of the part that fails to dominate
  int part_b = 0;  // 1-based index of the part containing the witness
  int vertex = 0;  // vertex of part_b with no (d2-)neighbor in part_a
};

// smallest (part_a, part_b) in lexicographic order, lowest witness vertex;
// nullopt when the partition satisfies the mode
std::optional<Violation> first_violation(const Graph& g,
                                         const OrderedPartition& p, Mode mode);

}  // namespace d2t
