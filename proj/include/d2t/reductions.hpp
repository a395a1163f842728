#pragma once

#include <optional>
#include <vector>

#include "d2t/graph.hpp"
#include "d2t/solver.hpp"
#include "d2t/special_classes.hpp"

namespace d2t {

enum class VertexRole {
  original,    // vertex copied verbatim from the source graph
  subdivision, // split gadget: vertex placed on a source edge
  copy1,       // bipartite gadget: first vertex copy
  copy2,       // bipartite gadget: second vertex copy
  edge_copy1,  // bipartite gadget: first edge copy
  edge_copy2,  // bipartite gadget: second edge copy
  apex,        // star-convex gadget: the added center
};

const char* to_string(VertexRole r);

enum class GadgetKind { split, bipartite, star_convex };

// Constructed gadget plus the map back to the source instance. Vertex
// numbering is fixed: originals first in source order, auxiliary vertices
// in edge-index order, apex last; edges are indexed lexicographically by
// endpoint pair.
struct GadgetOutput {
  Graph graph;
  GadgetKind kind = GadgetKind::split;
  std::vector<VertexRole> role;
  std::vector<int> source_index;  // source vertex id / edge index; -1 for apex
  int shift = 0;                  // gadget d2 value = source value + shift
  std::optional<BipartiteView> view;  // stated sides, for bipartite-shaped gadgets
};

// subdivide every edge once, then turn the subdivision vertices into a
// clique; the result is a split graph with n+m vertices and (m^2+3m)/2
// edges. shift = m. Requires m >= 1.
GadgetOutput split_gadget(const Graph& g);

// two vertex copies and two edge copies, edge copies joined completely;
// bipartite with sides V1+U2 / V2+U1, 2(n+m) vertices, m^2+4m edges.
// shift = 2m. Requires m >= 1.
GadgetOutput bipartite_gadget(const Graph& g);

// one apex added to side X, joined to all of Y; star-convex with the apex
// as center. shift = 1. Requires |Y| >= 1.
GadgetOutput star_convex_gadget(const BipartiteView& b);

struct ShiftReport {
  GadgetKind kind = GadgetKind::split;
  int source_value = 0;  // Tr for split/bipartite sources, d2 for star-convex
  int gadget_value = 0;  // d2 value of the gadget
  int shift = 0;
  bool pass = false;     // gadget_value == source_value + shift
  long long nodes_explored = 0;
};

// solves both sides exactly and compares against the stated shift
ShiftReport check_shift_equivalence(const Graph& source, GadgetKind kind,
                                    const SolverConfig& cfg = {});
ShiftReport check_shift_equivalence(const BipartiteView& source,
                                    const SolverConfig& cfg = {});

}  // namespace d2t
