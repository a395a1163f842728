#include "d2t/solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace d2t {

namespace {

// vertices by decreasing degree, ties by id; shared by the greedy warm
// start and the exact search so results stay deterministic
std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

// Greedy transitive partition of g: each vertex takes the lowest part
// index absent from its already-placed neighborhood, so every vertex in
// part j has neighbors in all parts below j. Always valid, never optimal
// ahead of the exact search, and at least as large as any clique.
OrderedPartition greedy_transitive(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> part_of(static_cast<size_t>(n), 0);
  int used = 0;
  for (int v : degree_order(g)) {
    VertexSet taken(n + 1);
    for (int u : g.neighbors(v))
      if (part_of[static_cast<size_t>(u)] > 0) taken.set(part_of[static_cast<size_t>(u)] - 1);
    int j = 0;
    while (taken.test(j)) ++j;
    part_of[static_cast<size_t>(v)] = j + 1;
    used = std::max(used, j + 1);
  }
  OrderedPartition p;
  p.universe_size = n;
  p.parts.assign(static_cast<size_t>(used), VertexSet(n));
  for (int v = 0; v < n; ++v) p.parts[static_cast<size_t>(part_of[static_cast<size_t>(v)] - 1)].set(v);
  return p;
}

// Feasibility probe: does g admit a transitive partition with exactly k
// non-empty parts?
//
// Parts are built from the top index down, in a canonical shape that
// every feasible partition can be rewritten into. A singleton part swaps
// with the part directly below or above it without breaking validity:
// one direction of the required dominations is the clique condition
// between singletons, the other turns an every-member condition into a
// some-member one. So all singleton parts can be bubbled to the top and
// put in a fixed id order, the top part can always be shrunk to a
// singleton, and each remaining lower part can be shrunk to a minimal
// set dominating everything above it (extras fold into part 1). The
// search therefore enumerates
//   - a top block of singletons with increasing ids downward, each
//     adjacent to all previous ones (they form a clique),
//   - then lower parts as minimal dominating covers of size >= 2,
//     branching on the candidates of the first uncovered vertex with
//     banning, with part 1 absorbing whatever remains (at least 2
//     vertices once any multi-vertex part exists).
//
// Pruning. A vertex can enter part j only with degree >= j-1. With j-1
// parts still unbuilt below, every placed vertex needs j-1 distinct free
// neighbors (one per future part, one surviving into part 1). A
// degree-count check keeps every unbuilt part openable.
class FeasibilityProbe {
public:
  FeasibilityProbe(const Graph& g, int k, long long budget, long long& nodes)
      : g_(g),
        n_(g.vertex_count()),
        k_(k),
        budget_(budget),
        nodes_(nodes),
        order_(degree_order(g)),
        part_of_(static_cast<size_t>(n_), 0),
        free_(VertexSet::full(n_)),
        placed_mask_(n_),
        supply_(static_cast<size_t>(n_), 0),
        free_by_deg_(static_cast<size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v) {
      supply_[static_cast<size_t>(v)] = g.degree(v);
      ++free_by_deg_[static_cast<size_t>(g.degree(v))];
    }
  }

  std::optional<OrderedPartition> run() {
    if (k_ == 1) {
      OrderedPartition p;
      p.universe_size = n_;
      p.parts.push_back(VertexSet::full(n_));
      return p;
    }
    if (singleton_block(k_, -1)) return harvest();
    return std::nullopt;
  }

private:
  // parts k..j+1 are singletons so far, the last one with id last_id;
  // part j becomes either the next singleton or the first multi part
  bool singleton_block(int j, int last_id) {
    if (j == 1) return leaf(last_id);
    for (int w = last_id + 1; w < n_; ++w) {
      if (!free_.test(w) || g_.degree(w) < j - 1) continue;
      if (!placed_mask_.is_subset_of(g_.neighbors(w))) continue;
      place(w, j);
      if (prunes_hold(j, false) && singleton_block(j - 1, w)) return true;
      unplace(w);
    }
    // parts j..2 and part 1 all need two or more vertices now
    if (free_count() >= 2 * j && start_multi(j)) return true;
    return false;
  }

  bool start_multi(int j) {
    if (j == 1) return leaf_multi();
    return extend_multi(j, placed_mask_, VertexSet(n_), 0);
  }

  // grow multi part j until everything above has a neighbor in it;
  // uncovered/banned travel by value, the placed mask mutates underneath
  bool extend_multi(int j, VertexSet uncovered, VertexSet banned, int size) {
    if (uncovered.empty()) {
      // covers of size one belong to the singleton block, skip them here
      if (size < 2) return false;
      return start_multi(j - 1);
    }
    int x = -1;
    for (int v : placed_) {
      if (uncovered.test(v)) {
        x = v;
        break;
      }
    }
    for (int w : order_) {
      if (g_.degree(w) < j - 1) break;
      if (!free_.test(w) || banned.test(w) || !g_.has_edge(x, w)) continue;
      place(w, j);
      if (prunes_hold(j, true)) {
        VertexSet next = uncovered;
        next.subtract(g_.neighbors(w));
        if (extend_multi(j, next, banned, size + 1)) return true;
      }
      unplace(w);
      banned.set(w);
    }
    return false;
  }

  // part 1 closing out an all-singleton column: the leftover block must
  // dominate everything; a leftover singleton joins the id chain
  bool leaf(int last_id) const {
    const int leftover = free_count();
    if (leftover == 0) return false;
    if (leftover == 1 && free_.first() <= last_id) return false;
    return supplies_positive();
  }

  // part 1 below multi parts has to be a multi part itself
  bool leaf_multi() const {
    return free_count() >= 2 && supplies_positive();
  }

  bool supplies_positive() const {
    for (int x : placed_)
      if (supply_[static_cast<size_t>(x)] == 0) return false;
    return true;
  }

  int free_count() const { return n_ - static_cast<int>(placed_.size()); }

  void place(int w, int j) {
    if (++nodes_ > budget_) throw BudgetExhausted(nodes_);
    part_of_[static_cast<size_t>(w)] = j;
    placed_.push_back(w);
    placed_mask_.set(w);
    free_.reset(w);
    --free_by_deg_[static_cast<size_t>(g_.degree(w))];
    for (int u : g_.neighbors(w)) --supply_[static_cast<size_t>(u)];
  }

  void unplace(int w) {
    for (int u : g_.neighbors(w)) ++supply_[static_cast<size_t>(u)];
    ++free_by_deg_[static_cast<size_t>(g_.degree(w))];
    free_.set(w);
    placed_mask_.reset(w);
    placed_.pop_back();
    part_of_[static_cast<size_t>(w)] = 0;
  }

  // j is the part under construction
  bool prunes_hold(int j, bool multi_phase) const {
    // each placed vertex must keep one free neighbor per unbuilt lower
    // part, one of which has to survive into part 1
    for (int x : placed_)
      if (supply_[static_cast<size_t>(x)] < j - 1) return false;
    // vertices of adequate degree must remain for each unbuilt part
    // below (two per part once in the multi phase), plus part 1
    const int per_part = multi_phase ? 2 : 1;
    int need = 0;
    int avail = 0;
    int d = n_ - 1;
    for (int i = j - 1; i >= 2; --i) {
      while (d >= i - 1) {
        avail += free_by_deg_[static_cast<size_t>(d)];
        --d;
      }
      need += per_part;
      if (need > avail) return false;
    }
    while (d >= 0) {
      avail += free_by_deg_[static_cast<size_t>(d)];
      --d;
    }
    return need + per_part <= avail;
  }

  OrderedPartition harvest() const {
    OrderedPartition p;
    p.universe_size = n_;
    p.parts.assign(static_cast<size_t>(k_), VertexSet(n_));
    p.parts[0] = free_;
    for (int v : placed_) p.parts[static_cast<size_t>(part_of_[static_cast<size_t>(v)] - 1)].set(v);
    return p;
  }

  const Graph& g_;
  int n_;
  int k_;
  long long budget_;
  long long& nodes_;
  std::vector<int> order_;
  std::vector<int> part_of_;
  VertexSet free_;
  VertexSet placed_mask_;
  std::vector<int> placed_;
  std::vector<int> supply_;
  std::vector<int> free_by_deg_;
};

void check_vertex_budget(const Graph& g, const SolverConfig& cfg) {
  if (cfg.vertex_budget < 1 || cfg.node_budget < 1)
    throw std::invalid_argument("solver budgets must be positive");
  if (g.vertex_count() > cfg.vertex_budget)
    throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, over the solver budget of " +
                                std::to_string(cfg.vertex_budget));
}

// core search on a graph with no universal vertices
OrderedPartition solve_reduced(const Graph& g, const SolverConfig& cfg,
                               long long& nodes) {
  const int n = g.vertex_count();
  OrderedPartition witness = greedy_transitive(g);
  const int lo = witness.size();
  // Singleton parts of a transitive partition are pairwise adjacent (the
  // lower one must dominate the higher), so with s singletons the vertex
  // budget forces k <= (n + s)/2 and s is at most the clique number. The
  // greedy partition is a proper coloring, so its size bounds the clique
  // number from above.
  const int hi = std::min({n, max_degree(g) + 1, (n + lo) / 2});
  if (cfg.search_order == SolverConfig::SearchOrder::upward) {
    for (int k = lo + 1; k <= hi; ++k) {
      auto found = FeasibilityProbe(g, k, cfg.node_budget, nodes).run();
      if (!found) break;
      witness = std::move(*found);
    }
  } else {
    for (int k = hi; k > lo; --k) {
      auto found = FeasibilityProbe(g, k, cfg.node_budget, nodes).run();
      if (found) {
        witness = std::move(*found);
        break;
      }
    }
  }
  return witness;
}

// Exact transitive solve, accumulating nodes into the caller's counter so
// budgets span a whole multi-probe (or multi-component) call.
//
// Universal vertices are peeled off first: each one contributes exactly
// one extra part. A universal vertex u can always be appended as the
// singleton last part, and conversely any partition folds down to one of
// the peeled graph after moving u's part into the first part. Squares of
// small-diameter graphs collapse completely under this rule.
SolveResult solve_transitive(const Graph& g, const SolverConfig& cfg,
                             long long& nodes) {
  const int n = g.vertex_count();
  std::vector<int> rest;
  std::vector<int> universal;
  for (int v = 0; v < n; ++v)
    (g.degree(v) == n - 1 ? universal : rest).push_back(v);

  if (universal.empty() || rest.empty()) {
    OrderedPartition witness;
    if (rest.empty()) {  // complete graph: one singleton part per vertex
      witness.universe_size = n;
      for (int v = 0; v < n; ++v) {
        VertexSet part(n);
        part.set(v);
        witness.parts.push_back(std::move(part));
      }
    } else {
      witness = solve_reduced(g, cfg, nodes);
    }
    return {witness.size(), std::move(witness), nodes, Mode::transitive};
  }

  InducedSubgraph sub = induced_subgraph(g, rest);
  SolveResult inner = solve_transitive(sub.graph, cfg, nodes);

  OrderedPartition witness;
  witness.universe_size = n;
  for (const auto& part : inner.witness.parts) {
    VertexSet lifted(n);
    for (int local : part) lifted.set(sub.to_parent[static_cast<size_t>(local)]);
    witness.parts.push_back(std::move(lifted));
  }
  for (int u : universal) {
    VertexSet part(n);
    part.set(u);
    witness.parts.push_back(std::move(part));
  }
  return {witness.size(), std::move(witness), nodes, Mode::transitive};
}

}  // namespace

std::pair<int, int> degree_bounds(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("degree_bounds needs a connected graph");
  const int n = g.vertex_count();
  const int delta = max_degree(g);
  const int lo = std::min(n, delta + 1);
  const int hi = std::min(n, delta * delta + 1);
  return {lo, hi};
}

SolveResult exact_transitivity(const Graph& g, const SolverConfig& cfg) {
  check_vertex_budget(g, cfg);
  long long nodes = 0;
  return solve_transitive(g, cfg, nodes);
}

SolveResult exact_d2_transitivity(const Graph& g, const SolverConfig& cfg) {
  check_vertex_budget(g, cfg);
  const int n = g.vertex_count();
  const auto comps = components(g);
  long long nodes = 0;

  if (comps.size() == 1) {
    SolveResult r = solve_transitive(square(g), cfg, nodes);
    r.mode = Mode::d2;
    return r;
  }

  // best component wins; everything else lands in the first part
  SolveResult best;
  const std::vector<int>* best_comp = nullptr;
  for (const auto& comp : comps) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    SolveResult r = solve_transitive(square(sub.graph), cfg, nodes);
    if (best_comp == nullptr || r.value > best.value) {
      best = std::move(r);
      best_comp = &comp;
    }
  }

  OrderedPartition folded;
  folded.universe_size = n;
  folded.parts.assign(static_cast<size_t>(best.value), VertexSet(n));
  {
    InducedSubgraph sub = induced_subgraph(g, *best_comp);
    for (size_t i = 0; i < best.witness.parts.size(); ++i)
      for (int local : best.witness.parts[i])
        folded.parts[i].set(sub.to_parent[static_cast<size_t>(local)]);
  }
  VertexSet rest = VertexSet::full(n);
  for (const auto& part : folded.parts) rest.subtract(part);
  folded.parts[0] |= rest;

  return {best.value, std::move(folded), nodes, Mode::d2};
}

std::optional<OrderedPartition> feasible_transitive(const Graph& g, int k,
                                                    const SolverConfig& cfg) {
  check_vertex_budget(g, cfg);
  if (k < 1 || k > g.vertex_count())
    throw std::invalid_argument("feasible_transitive: k must be in [1, n]");
  long long nodes = 0;
  return FeasibilityProbe(g, k, cfg.node_budget, nodes).run();
}

SolveResult greedy_d2_lower_bound(const Graph& g) {
  OrderedPartition p = greedy_transitive(square(g));
  const int value = p.size();
  return {value, std::move(p), 0, Mode::d2};
}

}  // namespace d2t
