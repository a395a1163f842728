#include "d2t/special_classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace d2t {

std::optional<BipartiteView> recognize_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<size_t>(root)] != -1) continue;
    color[static_cast<size_t>(root)] = 0;
    queue.assign(1, root);
    for (size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int v : g.neighbors(u)) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  BipartiteView b{g, VertexSet(n), VertexSet(n)};
  for (int v = 0; v < n; ++v)
    (color[static_cast<size_t>(v)] == 0 ? b.side_x : b.side_y).set(v);
  return b;
}

std::optional<SplitDecomposition> recognize_split(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  int h = 0;
  while (h < n && g.degree(order[static_cast<size_t>(h)]) >= h) ++h;

  SplitDecomposition d{VertexSet(n), VertexSet(n)};
  for (int i = 0; i < n; ++i)
    (i < h ? d.clique : d.independent).set(order[static_cast<size_t>(i)]);
  for (int v : d.clique) {
    VertexSet rest = d.clique;
    rest.reset(v);
    if (!rest.is_subset_of(g.neighbors(v))) return std::nullopt;
  }
  for (int v : d.independent)
    if (g.neighbors(v).intersects(d.independent)) return std::nullopt;
  return d;
}

namespace {

std::vector<int> side_by_degree(const Graph& g, const VertexSet& side) {
  std::vector<int> order = side.to_vector();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

bool nested(const Graph& g, const std::vector<int>& order) {
  for (size_t i = 1; i < order.size(); ++i)
    if (!g.neighbors(order[i]).is_subset_of(g.neighbors(order[i - 1])))
      return false;
  return true;
}

void check_view(const BipartiteView& b) {
  const int n = b.graph.vertex_count();
  if (b.side_x.universe() != n || b.side_y.universe() != n ||
      b.side_x.intersects(b.side_y) ||
      b.side_x.count() + b.side_y.count() != n)
    throw std::invalid_argument("bipartite view sides do not partition V");
  for (int x : b.side_x)
    if (b.graph.neighbors(x).intersects(b.side_x))
      throw std::invalid_argument("bipartite view has an edge inside side X");
  for (int y : b.side_y)
    if (b.graph.neighbors(y).intersects(b.side_y))
      throw std::invalid_argument("bipartite view has an edge inside side Y");
}

}  // namespace

std::optional<ChainOrdering> chain_ordering(const BipartiteView& b) {
  check_view(b);
  ChainOrdering ord{side_by_degree(b.graph, b.side_x),
                    side_by_degree(b.graph, b.side_y)};
  if (!nested(b.graph, ord.order_x) || !nested(b.graph, ord.order_y))
    return std::nullopt;
  return ord;
}

bool verify_star_convex(const BipartiteView& b, int center) {
  check_view(b);
  if (center < 0 || center >= b.graph.vertex_count() || !b.side_x.test(center))
    throw std::invalid_argument("star center must lie in side X");
  for (int y : b.side_y) {
    const VertexSet& nb = b.graph.neighbors(y);
    if (!nb.test(center) && nb.count() > 1) return false;
  }
  return true;
}

std::optional<int> find_star_center(const BipartiteView& b) {
  check_view(b);
  for (int x : b.side_x)
    if (verify_star_convex(b, x)) return x;
  return std::nullopt;
}

ComplementBipartiteResult d2_of_complement_bipartite(const BipartiteView& b) {
  check_view(b);
  const int nx = b.side_x.count();
  const int ny = b.side_y.count();
  if (nx == 0 || ny == 0)
    throw std::invalid_argument("both sides must be non-empty");
  ComplementBipartiteResult r;
  r.full_x = VertexSet(b.graph.vertex_count());
  r.full_y = VertexSet(b.graph.vertex_count());
  for (int x : b.side_x)
    if (b.graph.degree(x) == ny) r.full_x.set(x);
  for (int y : b.side_y)
    if (b.graph.degree(y) == nx) r.full_y.set(y);
  // the full-degree vertices induce a complete bipartite subgraph, so the
  // maximum matching over them is forced to min of the side sizes
  r.matching_size = std::min(r.full_x.count(), r.full_y.count());
  r.value = nx + ny - r.matching_size;
  return r;
}

BipartiteView chain_square_complement(const BipartiteView& b,
                                      const ChainOrdering& ord) {
  check_view(b);
  if (!is_connected(b.graph))
    throw std::invalid_argument("chain_square_complement needs a connected graph");
  if (ord.order_x.size() != static_cast<size_t>(b.side_x.count()) ||
      ord.order_y.size() != static_cast<size_t>(b.side_y.count()) ||
      !nested(b.graph, ord.order_x) || !nested(b.graph, ord.order_y))
    throw std::invalid_argument("invalid chain ordering for this view");

  std::vector<Edge> es;
  for (int x : b.side_x)
    for (int y : b.side_y)
      if (!b.graph.has_edge(x, y))
        es.emplace_back(std::min(x, y), std::max(x, y));
  return {build_graph(b.graph.vertex_count(), es), b.side_x, b.side_y};
}

int d2_of_chain(const BipartiteView& b, const SolverConfig& cfg) {
  auto ord = chain_ordering(b);
  if (!ord) throw std::invalid_argument("input is not a bipartite chain graph");
  if (!is_connected(b.graph))
    throw std::invalid_argument("d2_of_chain needs a connected graph");
  // square(G) = complement(H); the transitive value of that complement is
  // the d2 value of G
  BipartiteView h = chain_square_complement(b, *ord);
  return exact_transitivity(complement(h.graph), cfg).value;
}

}  // namespace d2t
