// d2t: transitive and d2-transitive partition toolkit.
//
// Exit codes: 0 success, 1 negative answer (failed verify/recognize/check),
// 2 input error, 3 node budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "d2t/closed_forms.hpp"
#include "d2t/graph.hpp"
#include "d2t/io.hpp"
#include "d2t/partition.hpp"
#include "d2t/reductions.hpp"
#include "d2t/report.hpp"
#include "d2t/solver.hpp"
#include "d2t/special_classes.hpp"

namespace {

using namespace d2t;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

class Timer {
public:
  long long ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Instance read_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return parse_instance(in);
}

// side markers from the file when present, otherwise two-coloring
BipartiteView require_view(const Instance& inst, const char* why) {
  if (inst.view) return *inst.view;
  auto view = recognize_bipartite(inst.graph);
  if (!view)
    throw std::invalid_argument(std::string(why) +
                                " needs a bipartite instance");
  return *view;
}

Mode parse_mode(const std::string& mode) {
  if (mode == "tr") return Mode::transitive;
  if (mode == "d2") return Mode::d2;
  throw std::invalid_argument("mode must be 'tr' or 'd2'");
}

OutputFormat parse_format(const std::string& format) {
  auto f = format_from_string(format);
  if (!f) throw std::invalid_argument("format must be 'json' or 'text'");
  return *f;
}

void print(const Report& r, const std::string& format) {
  std::cout << emit_report(r, parse_format(format));
}

Report instance_report(const char* command, const Instance& inst) {
  Report r;
  r["command"] = command;
  r["n"] = inst.graph.vertex_count();
  r["m"] = inst.graph.edge_count();
  Report edges = Report::array();
  for (const auto& [u, v] : inst.graph.edges()) edges.push_back({u, v});
  r["edges"] = std::move(edges);
  if (inst.view) {
    r["sides"]["x"] = inst.view->side_x.to_vector();
    r["sides"]["y"] = inst.view->side_y.to_vector();
  }
  return r;
}

int emit_instance_result(const char* command, const Instance& inst,
                         const std::string& format) {
  if (parse_format(format) == OutputFormat::text) {
    std::cout << emit_instance(inst);
  } else {
    print(instance_report(command, inst), format);
  }
  return kExitOk;
}

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::string mode = "d2";
  std::string partition_file;
  std::string klass;
  std::string gadget;
  std::string family;
  std::vector<double> params;
  uint64_t seed = 1;
  bool check = false;
  SolverConfig solver;
  std::string order = "upward";
};

SolverConfig solver_config(const Options& opt) {
  SolverConfig cfg = opt.solver;
  if (opt.order == "downward")
    cfg.search_order = SolverConfig::SearchOrder::downward;
  else if (opt.order != "upward")
    throw std::invalid_argument("order must be 'upward' or 'downward'");
  return cfg;
}

int run_solve(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);
  const Mode mode = parse_mode(opt.mode);
  const SolverConfig cfg = solver_config(opt);
  SolveResult res = mode == Mode::transitive
                        ? exact_transitivity(inst.graph, cfg)
                        : exact_d2_transitivity(inst.graph, cfg);
  if (first_violation(inst.graph, res.witness, mode))
    throw std::logic_error("solver returned an invalid witness");

  Report r;
  r["command"] = "solve";
  r["mode"] = opt.mode == "tr" ? "transitive" : "d2";
  r["n"] = inst.graph.vertex_count();
  r["m"] = inst.graph.edge_count();
  r["value"] = res.value;
  if (mode == Mode::d2 && is_connected(inst.graph)) {
    auto [lo, hi] = degree_bounds(inst.graph);
    r["bounds"]["lo"] = lo;
    r["bounds"]["hi"] = hi;
  }
  r["witness"] = witness_to_json(res.witness);
  r["nodes_explored"] = res.nodes_explored;
  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return kExitOk;
}

int run_bounds(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);
  auto [lo, hi] = degree_bounds(inst.graph);
  Report r;
  r["command"] = "bounds";
  r["n"] = inst.graph.vertex_count();
  r["m"] = inst.graph.edge_count();
  r["max_degree"] = max_degree(inst.graph);
  r["lo"] = lo;
  r["hi"] = hi;
  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return kExitOk;
}

int run_verify(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);
  std::ifstream pf(opt.partition_file);
  if (!pf)
    throw std::invalid_argument("cannot open '" + opt.partition_file + "'");
  OrderedPartition p = parse_partition(pf, inst.graph.vertex_count());
  const Mode mode = parse_mode(opt.mode);
  validate_partition(inst.graph, p);
  auto violation = first_violation(inst.graph, p, mode);

  Report r;
  r["command"] = "verify";
  r["mode"] = opt.mode == "tr" ? "transitive" : "d2";
  r["n"] = inst.graph.vertex_count();
  r["parts"] = p.size();
  r["ok"] = !violation.has_value();
  if (violation) {
    r["violation"]["part_a"] = violation->part_a;
    r["violation"]["part_b"] = violation->part_b;
    r["violation"]["vertex"] = violation->vertex;
  }
  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return violation ? kExitNegative : kExitOk;
}

int run_square(const Options& opt) {
  Instance inst = read_instance(opt.input);
  return emit_instance_result("square", {square(inst.graph), std::nullopt},
                              opt.format);
}

int run_complement(const Options& opt) {
  Instance inst = read_instance(opt.input);
  return emit_instance_result("complement",
                              {complement(inst.graph), std::nullopt},
                              opt.format);
}

int run_recognize(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);
  Report r;
  r["command"] = "recognize";
  r["class"] = opt.klass;
  bool ok = false;

  if (opt.klass == "bipartite") {
    if (auto v = recognize_bipartite(inst.graph)) {
      ok = true;
      r["sides"]["x"] = v->side_x.to_vector();
      r["sides"]["y"] = v->side_y.to_vector();
    }
  } else if (opt.klass == "split") {
    if (auto d = recognize_split(inst.graph)) {
      ok = true;
      r["clique"] = d->clique.to_vector();
      r["independent"] = d->independent.to_vector();
    }
  } else if (opt.klass == "chain") {
    auto view = recognize_bipartite(inst.graph);
    if (inst.view) view = inst.view;
    if (view) {
      if (auto ord = chain_ordering(*view)) {
        ok = true;
        r["order_x"] = ord->order_x;
        r["order_y"] = ord->order_y;
      }
    }
  } else if (opt.klass == "starconvex") {
    auto view = recognize_bipartite(inst.graph);
    if (inst.view) view = inst.view;
    if (view) {
      if (auto center = find_star_center(*view)) {
        ok = true;
        r["center"] = *center;
      }
    }
  } else {
    throw std::invalid_argument(
        "class must be one of bipartite|split|chain|starconvex");
  }

  r["ok"] = ok;
  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return ok ? kExitOk : kExitNegative;
}

int run_class_solve(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);
  Report r;
  r["command"] = "class-solve";
  r["class"] = opt.klass;

  if (opt.klass == "comp-bipartite") {
    // the instance is the bipartite graph B; the value refers to its
    // complement
    BipartiteView view = require_view(inst, "class-solve comp-bipartite");
    auto res = d2_of_complement_bipartite(view);
    r["n"] = inst.graph.vertex_count();
    r["m"] = inst.graph.edge_count();
    r["value"] = res.value;
    r["matching_size"] = res.matching_size;
    r["full_x"] = res.full_x.to_vector();
    r["full_y"] = res.full_y.to_vector();
  } else if (opt.klass == "chain") {
    BipartiteView view = require_view(inst, "class-solve chain");
    int value = d2_of_chain(view, solver_config(opt));
    r["n"] = inst.graph.vertex_count();
    r["m"] = inst.graph.edge_count();
    r["value"] = value;
  } else {
    throw std::invalid_argument("class must be comp-bipartite or chain");
  }

  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return kExitOk;
}

int run_reduce(const Options& opt) {
  Timer timer;
  Instance inst = read_instance(opt.input);

  GadgetKind kind;
  if (opt.gadget == "split")
    kind = GadgetKind::split;
  else if (opt.gadget == "bipartite")
    kind = GadgetKind::bipartite;
  else if (opt.gadget == "starconvex")
    kind = GadgetKind::star_convex;
  else
    throw std::invalid_argument("gadget must be split|bipartite|starconvex");

  std::optional<BipartiteView> source_view;
  GadgetOutput gadget;
  switch (kind) {
    case GadgetKind::split: gadget = split_gadget(inst.graph); break;
    case GadgetKind::bipartite: gadget = bipartite_gadget(inst.graph); break;
    case GadgetKind::star_convex:
      source_view = require_view(inst, "star-convex gadget");
      gadget = star_convex_gadget(*source_view);
      break;
  }

  if (!opt.check && parse_format(opt.format) == OutputFormat::text) {
    std::cout << emit_gadget(gadget);
    return kExitOk;
  }

  Report r;
  r["command"] = "reduce";
  r["gadget"] = opt.gadget;
  r["source_n"] = inst.graph.vertex_count();
  r["source_m"] = inst.graph.edge_count();
  r["gadget_n"] = gadget.graph.vertex_count();
  r["gadget_m"] = gadget.graph.edge_count();
  r["shift"] = gadget.shift;
  Report roles = Report::array();
  for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
    Report entry;
    entry["v"] = v;
    entry["role"] = to_string(gadget.role[static_cast<size_t>(v)]);
    if (gadget.source_index[static_cast<size_t>(v)] >= 0)
      entry["source"] = gadget.source_index[static_cast<size_t>(v)];
    roles.push_back(std::move(entry));
  }
  r["roles"] = std::move(roles);
  Report edges = Report::array();
  for (const auto& [u, v] : gadget.graph.edges()) edges.push_back({u, v});
  r["edges"] = std::move(edges);

  bool pass = true;
  if (opt.check) {
    const SolverConfig cfg = solver_config(opt);
    ShiftReport rep = kind == GadgetKind::star_convex
                          ? check_shift_equivalence(*source_view, cfg)
                          : check_shift_equivalence(inst.graph, kind, cfg);
    pass = rep.pass;
    r["check"]["source_value"] = rep.source_value;
    r["check"]["gadget_value"] = rep.gadget_value;
    r["check"]["pass"] = rep.pass;
    r["check"]["nodes_explored"] = rep.nodes_explored;
  }
  r["timing_ms"] = timer.ms();
  print(r, opt.format);
  return pass ? kExitOk : kExitNegative;
}

int run_generate(const Options& opt) {
  auto family = family_from_string(opt.family);
  if (!family)
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  Instance inst = generate(*family, opt.params, opt.seed);
  return emit_instance_result("generate", inst, opt.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transitive and d2-transitive vertex partitions"};
  app.require_subcommand(1);

  Options opt;
  int (*action)(const Options&) = nullptr;

  auto add_common = [&](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("file", opt.input, "instance file ('-' for stdin)");
    cmd->add_option("--format", opt.format, "output format: json|text");
    return cmd;
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--vertex-budget", opt.solver.vertex_budget,
                    "largest accepted vertex count")
        ->envname("D2T_VERTEX_BUDGET");
    cmd->add_option("--node-budget", opt.solver.node_budget,
                    "search node limit before giving up")
        ->envname("D2T_NODE_BUDGET");
    cmd->add_option("--order", opt.order, "k-scan direction: upward|downward");
    return cmd;
  };

  auto* solve = add_solver(add_common(app.add_subcommand(
      "solve", "exact transitivity / d2-transitivity with witness")));
  solve->add_option("--mode", opt.mode, "tr|d2 (default d2)");
  solve->callback([&] { action = run_solve; });

  auto* bounds = add_common(app.add_subcommand(
      "bounds", "degree bounds for the d2 value of a connected graph"));
  bounds->callback([&] { action = run_bounds; });

  auto* verify = add_common(
      app.add_subcommand("verify", "check a partition against an instance"));
  verify->add_option("--partition", opt.partition_file, "partition file")
      ->required();
  verify->add_option("--mode", opt.mode, "tr|d2 (default d2)");
  verify->callback([&] { action = run_verify; });

  auto* square_cmd =
      add_common(app.add_subcommand("square", "emit the square graph"));
  square_cmd->callback([&] { action = run_square; });

  auto* complement_cmd =
      add_common(app.add_subcommand("complement", "emit the complement graph"));
  complement_cmd->callback([&] { action = run_complement; });

  auto* recognize = add_common(app.add_subcommand(
      "recognize", "test class membership and emit a certificate"));
  recognize->add_option("--class", opt.klass,
                        "bipartite|split|chain|starconvex")
      ->required();
  recognize->callback([&] { action = run_recognize; });

  auto* class_solve = add_solver(add_common(app.add_subcommand(
      "class-solve", "d2 value via the class-specific algorithm")));
  class_solve->add_option("--class", opt.klass, "comp-bipartite|chain")
      ->required();
  class_solve->callback([&] { action = run_class_solve; });

  auto* reduce = add_solver(add_common(
      app.add_subcommand("reduce", "build a hardness gadget from the instance")));
  reduce->add_option("--gadget", opt.gadget, "split|bipartite|starconvex")
      ->required();
  reduce->add_flag("--check", opt.check,
                   "also solve both sides and verify the value shift");
  reduce->callback([&] { action = run_reduce; });

  auto* gen = add_solver(add_common(
      app.add_subcommand("generate", "emit a deterministic instance"), false));
  gen->add_option("--family", opt.family,
                  "path|cycle|complete|complete_bipartite|chain|split|gnp|"
                  "bipartite_gnp")
      ->required();
  gen->add_option("--params", opt.params, "family parameters")->required();
  gen->add_option("--seed", opt.seed, "generator seed");
  gen->callback([&] { action = run_generate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    return action(opt);
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
}
