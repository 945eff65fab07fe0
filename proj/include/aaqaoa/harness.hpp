#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aaqaoa/automorphism.hpp"
#include "aaqaoa/graph.hpp"
#include "aaqaoa/hamiltonian.hpp"
#include "aaqaoa/nelder_mead.hpp"
#include "aaqaoa/qaoa.hpp"

namespace aaqaoa {

/// Optimal cut. Bipartite graphs answer |E| directly; anything else is
/// enumerated over 2^(n-1) assignments (vertex n-1 pinned), up to n = 24.
int classical_max_cut(const Graph& g);

/// best_cut / c_max.
double approximation_ratio(int best_cut, int c_max);

enum class RunMode { full, reduced, both };

std::string to_string(RunMode m);
RunMode parse_run_mode(std::string_view name);

struct RunConfig {
  Convention convention = Convention::maxcut;
  int layers = 1;
  int shots = 4096;
  std::uint64_t seed = 7;
  OptimizerConfig optimizer;
  RunMode mode = RunMode::both;
  Estimator estimator = Estimator::lightcone;
  int qubit_cap = kDefaultQubitCap;

  void validate() const;
};

/// Outcome of one measurement mode (full or reduced observable).
struct ModeResult {
  Eigen::VectorXd best_params;  // (betas, gammas)
  double best_expectation = 0.0;
  int best_sampled_cut = 0;
  double ratio = 0.0;
  double wall_time = 0.0;
  int evaluations = 0;
  int simulated_qubits = 0;
};

struct InstanceRecord {
  std::string label;  // e.g. "binary G(15,14)"
  int n = 0;
  int m = 0;
  int classes = 0;
  std::vector<Edge> representatives;
  int terms_full = 0;
  int terms_reduced = 0;
  double reduction_pct = 0.0;
  Convention convention = Convention::maxcut;
  int c_max = 0;
  std::uint64_t seed = 0;
  std::optional<ModeResult> full;
  std::optional<ModeResult> reduced;
  /// Host high-water mark in KiB when readable; informational.
  std::optional<long> peak_memory_kib;
};

/// Symmetry and term-count columns only; no simulation.
InstanceRecord analyze_instance(const Graph& g, const std::string& label, Convention convention,
                                std::uint64_t seed = 0);

/// Classes -> Hamiltonians -> optimisation per mode -> sampling at the
/// optimum -> approximation ratio. All randomness comes from cfg.seed; both
/// modes sample with the same seed.
InstanceRecord run_instance(const Graph& g, const std::string& label, const RunConfig& cfg);

enum class ReportFormat { csv, markdown };
ReportFormat parse_report_format(std::string_view name);

/// Columns: graph,n,m,classes,terms_red,terms_full,reduction_pct,t_red_s,
/// t_full_s,r_red,r_full,c_max,seed. Missing values are left empty; times
/// are written only when `with_timing` is set, keeping reports reproducible.
std::string emit_report(const std::vector<InstanceRecord>& records, ReportFormat format, bool with_timing = false);

/// Named instance batches: table1, table2, table5, desk.
std::vector<InstanceRecord> run_bench_suite(const std::string& suite, std::uint64_t seed);

/// Notes printed alongside a suite (known discrepancies in the reference tables).
std::vector<std::string> bench_suite_notes(const std::string& suite);

std::optional<long> peak_memory_kib();

}  // namespace aaqaoa
