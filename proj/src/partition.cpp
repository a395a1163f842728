#include "d2t/partition.hpp"

#include <stdexcept>
#include <string>

namespace d2t {

namespace {

void check_pair(const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("domination check needs non-empty sets");
  if (a.intersects(b))
    throw std::invalid_argument("domination check needs disjoint sets");
}

// vertices within distance one of a
VertexSet ball1(const Graph& g, const VertexSet& a) {
  VertexSet reach(g.vertex_count());
  for (int v : a) reach |= g.neighbors(v);
  return reach;
}

}  // namespace

void validate_partition(const Graph& g, const OrderedPartition& p) {
  if (p.universe_size != g.vertex_count())
    throw std::invalid_argument("partition universe does not match graph");
  if (p.parts.empty()) throw std::invalid_argument("partition has no parts");
  VertexSet seen(g.vertex_count());
  int total = 0;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    const VertexSet& part = p.parts[i];
    if (part.universe() != g.vertex_count())
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " has wrong universe size");
    if (part.empty())
      throw std::invalid_argument("part " + std::to_string(i + 1) + " is empty");
    if (part.intersects(seen))
      throw std::invalid_argument("part " + std::to_string(i + 1) +
                                  " overlaps an earlier part");
    seen |= part;
    total += part.count();
  }
  if (total != g.vertex_count())
    throw std::invalid_argument("partition does not cover all vertices");
}

bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_pair(a, b);
  return b.is_subset_of(ball1(g, a));
}

bool d2_dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_pair(a, b);
  VertexSet reach = ball1(g, a);
  VertexSet reach2 = reach;
  for (int v : reach) reach2 |= g.neighbors(v);
  return b.is_subset_of(reach2);
}

namespace {

// core loop shared by the boolean checks and the diagnostic; h is the
// graph whose adjacency realizes the domination relation (g itself for
// plain transitivity, square(g) for the d2 variant)
std::optional<Violation> scan(const Graph& h, const OrderedPartition& p) {
  const int k = p.size();
  for (int i = 0; i < k; ++i) {
    VertexSet reach = ball1(h, p.parts[static_cast<size_t>(i)]);
    for (int j = i + 1; j < k; ++j) {
      VertexSet missed = p.parts[static_cast<size_t>(j)];
      missed.subtract(reach);
      if (!missed.empty()) return Violation{i + 1, j + 1, missed.first()};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_transitive(const Graph& g, const OrderedPartition& p) {
  validate_partition(g, p);
  return !scan(g, p).has_value();
}

bool is_d2_transitive(const Graph& g, const OrderedPartition& p) {
  validate_partition(g, p);
  // one square computation instead of k^2 distance queries
  return !scan(square(g), p).has_value();
}

std::optional<Violation> first_violation(const Graph& g,
                                         const OrderedPartition& p, Mode mode) {
  validate_partition(g, p);
  return mode == Mode::transitive ? scan(g, p) : scan(square(g), p);
}

}  // namespace d2t
