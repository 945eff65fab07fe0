#include "aaqaoa/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <queue>
#include <sstream>

#include "aaqaoa/errors.hpp"
#include "aaqaoa/simulator.hpp"

namespace aaqaoa {

namespace {

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          frontier.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

int classical_max_cut(const Graph& g) {
  if (two_coloring(g)) return g.num_edges();
  const int n = g.num_vertices();
  if (n > 24)
    throw ResourceError("classical_max_cut: non-bipartite graph with " + std::to_string(n) +
                        " vertices exceeds the enumeration limit of 24");
  int best = 0;
  const BasisIndex half = BasisIndex{1} << (n - 1);
  for (BasisIndex x = 0; x < half; ++x) best = std::max(best, cut_value(g, x));
  return best;
}

double approximation_ratio(int best_cut, int c_max) {
  if (c_max <= 0) throw ContractError("approximation_ratio: optimal cut must be positive");
  if (best_cut < 0 || best_cut > c_max) throw ContractError("approximation_ratio: cut outside 0..c_max");
  return static_cast<double>(best_cut) / c_max;
}

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::full: return "full";
    case RunMode::reduced: return "reduced";
    case RunMode::both: return "both";
  }
  return "both";
}

RunMode parse_run_mode(std::string_view name) {
  if (name == "full") return RunMode::full;
  if (name == "reduced") return RunMode::reduced;
  if (name == "both") return RunMode::both;
  throw ContractError("unknown mode \"" + std::string(name) + "\"");
}

void RunConfig::validate() const {
  if (layers < 1) throw ContractError("run: layers must be >= 1");
  if (shots < 1) throw ContractError("run: shots must be >= 1");
  optimizer.validate();
}

InstanceRecord analyze_instance(const Graph& g, const std::string& label, Convention convention, std::uint64_t seed) {
  InstanceRecord rec;
  rec.label = label;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.convention = convention;
  rec.seed = seed;
  const auto classes = edge_equivalence_classes(g);
  rec.classes = classes.num_classes();
  rec.representatives = classes.representatives();
  const auto full = qubo_to_ising(build_full_qubo(g), convention);
  const auto reduced = qubo_to_ising(build_reduced_qubo(g, classes), convention);
  rec.terms_full = full.term_count().total();
  rec.terms_reduced = reduced.term_count().total();
  if (rec.terms_full > 0) rec.reduction_pct = reduction_percentage(full, reduced);
  rec.c_max = classical_max_cut(g);
  return rec;
}

InstanceRecord run_instance(const Graph& g, const std::string& label, const RunConfig& cfg) {
  cfg.validate();
  if (g.num_edges() == 0) throw ContractError("run: graph has no edges");
  check_qubit_count(g.num_vertices(), cfg.qubit_cap, sizeof(std::complex<double>));
  InstanceRecord rec = analyze_instance(g, label, cfg.convention, cfg.seed);

  const auto classes = edge_equivalence_classes(g);
  const auto h_full = qubo_to_ising(build_full_qubo(g), cfg.convention);
  const auto h_reduced = qubo_to_ising(build_reduced_qubo(g, classes), cfg.convention);
  const PhaseOperator ansatz(h_full);

  auto solve = [&](const IsingHamiltonian& h_measure) {
    const auto opt = optimize_qaoa(g, h_measure, h_full, cfg.layers, cfg.optimizer, cfg.estimator, cfg.qubit_cap);
    ModeResult res;
    res.best_params = opt.best_params;
    res.best_expectation = -opt.best_value;
    res.wall_time = opt.wall_time;
    res.evaluations = opt.evaluations;
    res.simulated_qubits = QaoaObjective(h_full, h_measure, cfg.layers, cfg.estimator, cfg.qubit_cap).simulated_qubits();
    const auto state = build_qaoa_state<double>(ansatz, AnsatzParams::unflatten(opt.best_params), cfg.qubit_cap);
    for (BasisIndex x : sample_bitstrings(state, cfg.shots, cfg.seed))
      res.best_sampled_cut = std::max(res.best_sampled_cut, cut_value(g, x));
    res.ratio = approximation_ratio(res.best_sampled_cut, rec.c_max);
    return res;
  };

  if (cfg.mode != RunMode::reduced) rec.full = solve(h_full);
  if (cfg.mode != RunMode::full) rec.reduced = solve(h_reduced);
  rec.peak_memory_kib = peak_memory_kib();
  return rec;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown" || name == "md") return ReportFormat::markdown;
  throw ContractError("unknown report format \"" + std::string(name) + "\"");
}

namespace {

std::string fixed2(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> row_cells(const InstanceRecord& r, bool with_timing) {
  auto time = [&](const std::optional<ModeResult>& m) { return m && with_timing ? fixed2(m->wall_time) : ""; };
  auto ratio = [&](const std::optional<ModeResult>& m) { return m ? fixed2(m->ratio) : ""; };
  return {r.label,
          std::to_string(r.n),
          std::to_string(r.m),
          std::to_string(r.classes),
          std::to_string(r.terms_reduced),
          std::to_string(r.terms_full),
          fixed2(r.reduction_pct),
          time(r.reduced),
          time(r.full),
          ratio(r.reduced),
          ratio(r.full),
          std::to_string(r.c_max),
          std::to_string(r.seed)};
}

const std::vector<std::string> kColumns = {"graph",   "n",       "m",     "classes", "terms_red",
                                           "terms_full", "reduction_pct", "t_red_s", "t_full_s",
                                           "r_red",   "r_full",  "c_max", "seed"};

}  // namespace

std::string emit_report(const std::vector<InstanceRecord>& records, ReportFormat format, bool with_timing) {
  if (records.empty()) throw ContractError("emit_report: no records");
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& r : records) {
      auto cells = row_cells(r, with_timing);
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << '\n';
    }
    return out.str();
  }
  out << '|';
  for (const auto& c : kColumns) out << ' ' << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < kColumns.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : records) {
    out << '|';
    for (const auto& cell : row_cells(r, with_timing)) out << ' ' << cell << " |";
    out << '\n';
  }
  return out.str();
}

namespace {

std::string label_for(const std::string& kind, const Graph& g) { return kind + " G" + graph_label(g); }

RunConfig desk_config(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.mode = RunMode::both;
  cfg.convention = Convention::maxcut;
  return cfg;
}

}  // namespace

std::vector<InstanceRecord> run_bench_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<InstanceRecord> records;
  if (suite == "table1") {
    for (int n : {5, 10, 15, 20, 25, 30, 31, 34}) {
      const auto g = full_rary_tree(2, n);
      records.push_back(analyze_instance(g, label_for("binary", g), Convention::adjacency, seed));
    }
  } else if (suite == "table2") {
    for (auto [r, h] : {std::pair{2, 2}, {3, 2}, {2, 3}, {2, 4}}) {
      const auto g = balanced_tree(r, h);
      records.push_back(analyze_instance(g, label_for("balanced", g), Convention::adjacency, seed));
    }
  } else if (suite == "table5") {
    for (int n : {28, 29}) {
      const auto g = star_graph(n);
      records.push_back(analyze_instance(g, label_for("star", g), Convention::adjacency, seed));
    }
    const auto g = star_graph(16);
    records.push_back(run_instance(g, label_for("star", g), desk_config(seed)));
  } else if (suite == "desk") {
    for (int n : {5, 10, 15}) {
      const auto g = full_rary_tree(2, n);
      records.push_back(run_instance(g, label_for("binary", g), desk_config(seed)));
    }
    for (auto [r, h] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
      const auto g = balanced_tree(r, h);
      records.push_back(run_instance(g, label_for("balanced", g), desk_config(seed)));
    }
    const auto g = star_graph(12);
    records.push_back(run_instance(g, label_for("star", g), desk_config(seed)));
  } else {
    throw ContractError("unknown bench suite \"" + suite + "\" (table1, table2, table5, desk)");
  }
  return records;
}

std::vector<std::string> bench_suite_notes(const std::string& suite) {
  std::vector<std::string> notes;
  if (suite == "table1" || suite == "table2")
    notes.push_back("reduced term counts use the lexicographically smallest edge of each class as its "
                    "representative; other choices change terms_red but not classes");
  if (suite == "table1") {
    notes.push_back("the reference listing gives the first binary instance as (5,6); a 5-vertex binary tree "
                    "has 4 edges, so it is reproduced as G(5,4)");
    notes.push_back("the reference listing gives 38.15% for G(20,19) with 24 of 39 terms; those counts give "
                    "38.46%");
  }
  if (suite == "table5")
    notes.push_back("28- and 29-vertex stars exceed the statevector cap; the simulated row uses a 16-vertex star");
  return notes;
}

std::optional<long> peak_memory_kib() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line))
    if (line.rfind("VmHWM:", 0) == 0) {
      std::istringstream fields(line.substr(6));
      long kib = 0;
      if (fields >> kib) return kib;
    }
  return std::nullopt;
}

}  // namespace aaqaoa
