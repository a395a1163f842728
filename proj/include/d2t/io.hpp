#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "d2t/graph.hpp"
#include "d2t/partition.hpp"
#include "d2t/reductions.hpp"
#include "d2t/special_classes.hpp"

namespace d2t {

class ParseError : public std::invalid_argument {
public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what),
        line(line) {}

  int line;
};

// a parsed instance: a graph, plus certified sides when the file carried
// a "b" line
struct Instance {
  Graph graph;
  std::optional<BipartiteView> view;
};

// Line-oriented instance format:
//   # comment
//   p <n> <m>
//   e <u> <v>          (0-based ids, one per line)
//   b X: 0 1 | Y: 2 3  (optional side markers)
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

std::string emit_instance(const Instance& inst);

// instance text plus "# role <vertex> <role> <source>" comment lines
std::string emit_gadget(const GadgetOutput& g);

// partition format: one part per line, vertex ids space-separated, line
// order = part order
OrderedPartition parse_partition(std::istream& in, int universe_size);
std::string emit_partition(const OrderedPartition& p);

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  chain,
  split,
  gnp,
  bipartite_gnp,
};

std::optional<Family> family_from_string(const std::string& name);
const char* to_string(Family f);

// Deterministic instance generator: same (family, params, seed) means the
// same instance, independent of platform. Parameter counts:
//   path n | cycle n | complete n | complete_bipartite t1 t2
//   chain nx ny (seeded, always connected)
//   split k s (seeded) | gnp n p (seeded) | bipartite_gnp nx ny p (seeded)
Instance generate(Family f, std::span<const double> params, uint64_t seed);

}  // namespace d2t
