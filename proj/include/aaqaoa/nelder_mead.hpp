#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace aaqaoa {

struct OptimizerConfig {
  /// Per start.
  int max_evals = 200;
  /// Terminate once the simplex fits in a box of this half-width...
  double x_tol = 1e-6;
  /// ...or the spread of vertex values drops to this.
  double f_tol = 1e-10;
  double initial_step = 0.1;
  /// Explicit start grid, one value list per dimension (outer product).
  /// Empty: the caller's default.
  std::vector<std::vector<double>> grid;
  /// Starts drawn from the grid when its outer product is too large (p > 1).
  int max_starts = 8;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TracePoint {
  Eigen::VectorXd params;
  double value = 0.0;
};

struct OptResult {
  Eigen::VectorXd best_params;
  double best_value = 0.0;
  int evaluations = 0;
  int starts = 0;
  /// Incumbent improvements in evaluation order.
  std::vector<TracePoint> trace;
  double wall_time = 0.0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Downhill simplex with reflection 1, expansion 2, contraction 0.5 and
/// shrink 0.5, starting from x0 plus `initial_step` along each axis.
/// Throws ContractError if the objective returns a non-finite value.
OptResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg);

/// Local search from every start; the winner is the lowest value, with
/// values within 1e-9 (relative) treated as ties and broken by the
/// lexicographically smallest parameter vector.
OptResult multistart_nelder_mead(const Objective& f, const std::vector<Eigen::VectorXd>& starts,
                                 const OptimizerConfig& cfg);

}  // namespace aaqaoa
