#include "d2t/io.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace d2t {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<int> parse_id_list(std::istringstream& in, int lineno) {
  std::vector<int> ids;
  std::string tok;
  while (in >> tok) {
    if (tok == "|") break;
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected a vertex id, got '" + tok + "'");
    }
  }
  return ids;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  int lineno = 0;
  bool got_header = false;
  int n = 0, declared_m = 0;
  std::vector<Edge> edges;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> sides;

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      if (got_header) throw ParseError(lineno, "duplicate header");
      if (!(ls >> n >> declared_m) || n < 1 || declared_m < 0)
        throw ParseError(lineno, "malformed header, expected 'p <n> <m>'");
      got_header = true;
    } else if (kind == "e") {
      if (!got_header) throw ParseError(lineno, "edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(lineno, "edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ") out of range");
      if (u == v)
        throw ParseError(lineno, "self-loop (" + std::to_string(u) + ", " +
                                     std::to_string(v) + ")");
      for (const auto& [a, b] : edges)
        if ((a == u && b == v) || (a == v && b == u))
          throw ParseError(lineno, "duplicate edge (" + std::to_string(u) +
                                       ", " + std::to_string(v) + ")");
      edges.emplace_back(u, v);
    } else if (kind == "b") {
      if (!got_header) throw ParseError(lineno, "side line before header");
      if (sides) throw ParseError(lineno, "duplicate side line");
      std::string tag;
      if (!(ls >> tag) || tag != "X:")
        throw ParseError(lineno, "expected 'b X: <ids> | Y: <ids>'");
      auto xs = parse_id_list(ls, lineno);
      if (!(ls >> tag) || tag != "Y:")
        throw ParseError(lineno, "expected 'Y:' after '|'");
      auto ys = parse_id_list(ls, lineno);
      sides = {std::move(xs), std::move(ys)};
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
  }
  if (!got_header) throw ParseError(lineno, "missing 'p <n> <m>' header");
  if (declared_m != static_cast<int>(edges.size()))
    throw ParseError(lineno, "header declares " + std::to_string(declared_m) +
                                 " edges but " +
                                 std::to_string(edges.size()) + " were given");

  Instance inst;
  inst.graph = build_graph(n, edges);
  if (sides) {
    VertexSet x(n), y(n);
    for (int v : sides->first) {
      if (v < 0 || v >= n) throw ParseError(lineno, "side vertex out of range");
      x.set(v);
    }
    for (int v : sides->second) {
      if (v < 0 || v >= n) throw ParseError(lineno, "side vertex out of range");
      y.set(v);
    }
    BipartiteView view{inst.graph, x, y};
    if (x.intersects(y) || x.count() + y.count() != n)
      throw ParseError(lineno, "side markers do not partition the vertices");
    for (const auto& [u, v] : edges)
      if (x.test(u) == x.test(v))
        throw ParseError(lineno, "edge (" + std::to_string(u) + ", " +
                                     std::to_string(v) +
                                     ") does not cross the declared sides");
    inst.view = std::move(view);
  }
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p " << inst.graph.vertex_count() << " " << inst.graph.edge_count()
      << "\n";
  if (inst.view) {
    out << "b X:";
    for (int v : inst.view->side_x) out << " " << v;
    out << " | Y:";
    for (int v : inst.view->side_y) out << " " << v;
    out << "\n";
  }
  for (const auto& [u, v] : inst.graph.edges())
    out << "e " << u << " " << v << "\n";
  return out.str();
}

std::string emit_gadget(const GadgetOutput& g) {
  std::ostringstream out;
  out << "# gadget shift " << g.shift << "\n";
  for (int v = 0; v < g.graph.vertex_count(); ++v) {
    out << "# role " << v << " " << to_string(g.role[static_cast<size_t>(v)]);
    if (g.source_index[static_cast<size_t>(v)] >= 0)
      out << " " << g.source_index[static_cast<size_t>(v)];
    out << "\n";
  }
  Instance inst{g.graph, g.view};
  out << emit_instance(inst);
  return out.str();
}

OrderedPartition parse_partition(std::istream& in, int universe_size) {
  OrderedPartition p;
  p.universe_size = universe_size;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    VertexSet part(universe_size);
    auto ids = parse_id_list(ls, lineno);
    for (int v : ids) {
      if (v < 0 || v >= universe_size)
        throw ParseError(lineno, "vertex " + std::to_string(v) +
                                     " out of range for n=" +
                                     std::to_string(universe_size));
      part.set(v);
    }
    if (!part.empty()) p.parts.push_back(std::move(part));
  }
  return p;
}

std::string emit_partition(const OrderedPartition& p) {
  std::ostringstream out;
  for (const auto& part : p.parts) {
    bool first = true;
    for (int v : part) {
      if (!first) out << " ";
      out << v;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "chain") return Family::chain;
  if (name == "split") return Family::split;
  if (name == "gnp") return Family::gnp;
  if (name == "bipartite_gnp") return Family::bipartite_gnp;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::chain: return "chain";
    case Family::split: return "split";
    case Family::gnp: return "gnp";
    case Family::bipartite_gnp: return "bipartite_gnp";
  }
  return "?";
}

namespace {

// all randomness flows through these two helpers so generated instances
// are identical on every platform (mt19937_64 output is pinned by the
// standard; distributions are not)
int next_below(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<uint64_t>(k));
}

double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int int_param(std::span<const double> params, size_t i, const char* what,
              int min_value) {
  if (i >= params.size())
    throw std::invalid_argument(std::string("missing parameter: ") + what);
  double raw = params[i];
  if (raw != std::floor(raw))
    throw std::invalid_argument(std::string(what) + " must be an integer");
  int v = static_cast<int>(raw);
  if (v < min_value)
    throw std::invalid_argument(std::string(what) + " must be at least " +
                                std::to_string(min_value));
  return v;
}

double prob_param(std::span<const double> params, size_t i, const char* what) {
  if (i >= params.size())
    throw std::invalid_argument(std::string("missing parameter: ") + what);
  double p = params[i];
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  return p;
}

Instance with_sides(Graph g, int nx, int ny) {
  const int n = nx + ny;
  VertexSet x(n), y(n);
  for (int v = 0; v < nx; ++v) x.set(v);
  for (int v = nx; v < n; ++v) y.set(v);
  Instance inst;
  inst.graph = std::move(g);
  inst.view = BipartiteView{inst.graph, x, y};
  return inst;
}

}  // namespace

Instance generate(Family f, std::span<const double> params, uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (f) {
    case Family::path: {
      int n = int_param(params, 0, "n", 1);
      std::vector<Edge> es;
      for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
      return {build_graph(n, es), std::nullopt};
    }
    case Family::cycle: {
      int n = int_param(params, 0, "n", 3);
      std::vector<Edge> es;
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      return {build_graph(n, es), std::nullopt};
    }
    case Family::complete: {
      int n = int_param(params, 0, "n", 1);
      std::vector<Edge> es;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
      return {build_graph(n, es), std::nullopt};
    }
    case Family::complete_bipartite: {
      int t1 = int_param(params, 0, "t1", 1);
      int t2 = int_param(params, 1, "t2", 1);
      std::vector<Edge> es;
      for (int u = 0; u < t1; ++u)
        for (int v = 0; v < t2; ++v) es.emplace_back(u, t1 + v);
      return with_sides(build_graph(t1 + t2, es), t1, t2);
    }
    case Family::chain: {
      // nested neighborhood thresholds, non-increasing and never zero, so
      // the result is a connected chain graph
      int nx = int_param(params, 0, "nx", 1);
      int ny = int_param(params, 1, "ny", 1);
      std::vector<Edge> es;
      int threshold = ny;
      for (int i = 0; i < nx; ++i) {
        if (i > 0) threshold = 1 + next_below(rng, threshold);
        for (int j = 0; j < threshold; ++j) es.emplace_back(i, nx + j);
      }
      return with_sides(build_graph(nx + ny, es), nx, ny);
    }
    case Family::split: {
      int k = int_param(params, 0, "clique size", 1);
      int s = int_param(params, 1, "independent size", 0);
      std::vector<Edge> es;
      for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
      for (int v = 0; v < s; ++v)
        for (int u = 0; u < k; ++u)
          if (next_below(rng, 2) == 1) es.emplace_back(u, k + v);
      return {build_graph(k + s, es), std::nullopt};
    }
    case Family::gnp: {
      int n = int_param(params, 0, "n", 1);
      double p = prob_param(params, 1, "p");
      std::vector<Edge> es;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (next_unit(rng) < p) es.emplace_back(u, v);
      return {build_graph(n, es), std::nullopt};
    }
    case Family::bipartite_gnp: {
      int nx = int_param(params, 0, "nx", 1);
      int ny = int_param(params, 1, "ny", 1);
      double p = prob_param(params, 2, "p");
      std::vector<Edge> es;
      for (int u = 0; u < nx; ++u)
        for (int v = 0; v < ny; ++v)
          if (next_unit(rng) < p) es.emplace_back(u, nx + v);
      return with_sides(build_graph(nx + ny, es), nx, ny);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace d2t
