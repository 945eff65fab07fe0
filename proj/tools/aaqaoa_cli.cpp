// Command-line driver: graph generation, edge orbits, Hamiltonian reduction,
// causal-cone coverage, full-vs-reduced QAOA runs and benchmark tables.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aaqaoa/automorphism.hpp"
#include "aaqaoa/errors.hpp"
#include "aaqaoa/graph.hpp"
#include "aaqaoa/hamiltonian.hpp"
#include "aaqaoa/harness.hpp"
#include "aaqaoa/rcc.hpp"

namespace {

using namespace aaqaoa;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

void print_coverage(const Graph& g, const std::vector<Edge>& reps, int p) {
  const auto report = combined_coverage(g, reps, p);
  std::cout << "p = " << p << "\n";
  std::cout << std::left << std::setw(12) << "edge" << "cone\n";
  for (const auto& [e, ball] : report.per_edge)
    std::cout << std::setw(12) << ("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")")
              << join(ball) << "\n";
  std::cout << "covered   " << report.covered.size() << "/" << g.num_vertices() << " " << join(report.covered)
            << "\n";
  std::cout << "uncovered " << join(report.uncovered) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism-assisted QAOA toolkit for MaxCut on trees"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
  std::string kind, gen_out;
  int nodes = 0, branching = 2, height = 0;
  gen->add_option("--kind", kind, "binary|balanced|star|path")->required()
      ->check(CLI::IsMember({"binary", "balanced", "star", "path"}));
  gen->add_option("--nodes", nodes, "vertex count (binary, star, path)");
  gen->add_option("--branching", branching, "branching factor (binary, balanced)");
  gen->add_option("--height", height, "height (balanced)");
  gen->add_option("--out", gen_out, "output file")->required();

  // orbits
  auto* orbits = app.add_subcommand("orbits", "print edge equivalence classes as JSON");
  std::string orbits_graph;
  bool oracle = false;
  orbits->add_option("--graph", orbits_graph)->required();
  orbits->add_flag("--oracle", oracle, "cross-check against brute-force enumeration (n <= 10)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "write the reduced Ising Hamiltonian as JSON");
  std::string reduce_graph, reduce_conv = "maxcut", reduce_out, reduce_full_out;
  reduce->add_option("--graph", reduce_graph)->required();
  reduce->add_option("--convention", reduce_conv)->check(CLI::IsMember({"maxcut", "adjacency"}));
  reduce->add_option("--out", reduce_out, "reduced Hamiltonian JSON")->required();
  reduce->add_option("--full-out", reduce_full_out, "also write the full Hamiltonian JSON");

  // rcc
  auto* rcc = app.add_subcommand("rcc", "causal-cone coverage of the class representatives");
  std::string rcc_graph;
  int rcc_p = 1;
  bool rcc_minimal = false, rcc_json = false;
  rcc->add_option("--graph", rcc_graph)->required();
  auto* p_opt = rcc->add_option("--p", rcc_p, "layer depth")->check(CLI::PositiveNumber);
  rcc->add_flag("--minimal", rcc_minimal, "find the smallest covering depth")->excludes(p_opt);
  rcc->add_flag("--json", rcc_json, "print the coverage report as JSON");

  // run
  auto* run = app.add_subcommand("run", "optimise full and/or reduced AA-QAOA on one graph");
  std::string run_graph, run_mode = "both", run_conv = "maxcut", run_out, run_format = "csv",
                         run_estimator = "lightcone";
  RunConfig cfg;
  bool run_timing = true;
  run->add_option("--graph", run_graph)->required();
  run->add_option("--mode", run_mode)->check(CLI::IsMember({"full", "reduced", "both"}));
  run->add_option("--p", cfg.layers)->check(CLI::PositiveNumber);
  run->add_option("--shots", cfg.shots)->check(CLI::PositiveNumber);
  run->add_option("--seed", cfg.seed);
  run->add_option("--convention", run_conv)->check(CLI::IsMember({"maxcut", "adjacency"}));
  run->add_option("--max-evals", cfg.optimizer.max_evals, "evaluation budget per start")->check(CLI::PositiveNumber);
  run->add_option("--x-tol", cfg.optimizer.x_tol);
  run->add_option("--f-tol", cfg.optimizer.f_tol);
  run->add_option("--estimator", run_estimator)->check(CLI::IsMember({"lightcone", "statevector"}));
  run->add_option("--qubit-cap", cfg.qubit_cap);
  run->add_option("--out", run_out, "report file (default stdout)");
  run->add_option("--format", run_format)->check(CLI::IsMember({"csv", "markdown"}));
  run->add_flag("!--no-timing", run_timing, "leave the time columns empty");

  // bench
  auto* bench = app.add_subcommand("bench", "run a named instance suite and emit a report");
  std::string suite, bench_out, bench_format = "csv";
  std::uint64_t bench_seed = 7;
  bool bench_timing = false;
  bench->add_option("--suite", suite)->required()->check(CLI::IsMember({"table1", "table2", "table5", "desk"}));
  bench->add_option("--out", bench_out)->required();
  bench->add_option("--seed", bench_seed);
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_flag("--timing", bench_timing, "fill the time columns (the report is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      Graph g;
      if (kind == "binary") g = full_rary_tree(branching, nodes);
      else if (kind == "balanced") g = balanced_tree(branching, height);
      else if (kind == "star") g = star_graph(nodes);
      else g = path_graph(nodes);
      write_output(gen_out, serialize_edge_list(g));
    } else if (*orbits) {
      const auto g = load_graph(orbits_graph);
      const auto gens = find_automorphism_generators(g);
      const auto classes = edge_equivalence_classes(g, gens);
      std::cout << to_json(classes).dump(2) << "\n";
      if (oracle) {
        GeneratorSet all{g.num_vertices(), brute_force_automorphisms(g)};
        const bool match = edge_equivalence_classes(g, all) == classes;
        std::cerr << "oracle: " << all.generators.size() << " automorphisms, classes "
                  << (match ? "match" : "DIFFER") << "\n";
        if (!match) return 2;
      }
    } else if (*reduce) {
      const auto g = load_graph(reduce_graph);
      const auto conv = parse_convention(reduce_conv);
      const auto classes = edge_equivalence_classes(g);
      const auto full = qubo_to_ising(build_full_qubo(g), conv);
      const auto reduced = qubo_to_ising(build_reduced_qubo(g, classes), conv);
      write_output(reduce_out, to_json(reduced).dump(2) + "\n");
      if (!reduce_full_out.empty()) write_output(reduce_full_out, to_json(full).dump(2) + "\n");
      std::cout << "classes " << classes.num_classes() << ", terms full " << full.term_count().total()
                << ", reduced " << reduced.term_count().total() << ", reduction "
                << std::fixed << std::setprecision(2) << reduction_percentage(full, reduced) << "%\n";
    } else if (*rcc) {
      const auto g = load_graph(rcc_graph);
      const auto reps = edge_equivalence_classes(g).representatives();
      const int p = rcc_minimal ? minimal_depth(g, reps) : rcc_p;
      if (rcc_json)
        std::cout << to_json(combined_coverage(g, reps, p)).dump(2) << "\n";
      else
        print_coverage(g, reps, p);
      if (rcc_minimal) std::cout << "minimal depth " << p << "\n";
    } else if (*run) {
      const auto g = load_graph(run_graph);
      cfg.mode = parse_run_mode(run_mode);
      cfg.convention = parse_convention(run_conv);
      cfg.estimator = parse_estimator(run_estimator);
      const auto rec = run_instance(g, "G" + graph_label(g), cfg);
      write_output(run_out, emit_report({rec}, parse_report_format(run_format), run_timing));
      for (const auto* m : {&rec.full, &rec.reduced}) {
        if (!*m) continue;
        std::cerr << (m == &rec.full ? "full   " : "reduced") << ": <H> = " << std::setprecision(10)
                  << (*m)->best_expectation << ", best cut " << (*m)->best_sampled_cut << "/" << rec.c_max
                  << ", evals " << (*m)->evaluations << ", simulated qubits " << (*m)->simulated_qubits
                  << ", params [" << (*m)->best_params.transpose() << "]\n";
      }
      if (rec.peak_memory_kib) std::cerr << "peak memory " << *rec.peak_memory_kib << " KiB\n";
    } else if (*bench) {
      const auto records = run_bench_suite(suite, bench_seed);
      write_output(bench_out, emit_report(records, parse_report_format(bench_format), bench_timing));
      for (const auto& note : bench_suite_notes(suite)) std::cerr << "note: " << note << "\n";
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
