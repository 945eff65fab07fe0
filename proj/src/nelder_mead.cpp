#include "aaqaoa/nelder_mead.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "aaqaoa/errors.hpp"

namespace aaqaoa {

void OptimizerConfig::validate() const {
  if (max_evals < 1) throw ContractError("optimizer: max_evals must be >= 1");
  if (!(x_tol > 0) || !(f_tol > 0)) throw ContractError("optimizer: tolerances must be positive");
  if (!(initial_step > 0)) throw ContractError("optimizer: initial step must be positive");
  if (max_starts < 1) throw ContractError("optimizer: max_starts must be >= 1");
}

namespace {

struct BudgetExhausted {};

class CountingObjective {
 public:
  CountingObjective(const Objective& f, int budget, OptResult& result)
      : f_(f), budget_(budget), result_(result) {}

  double operator()(const Eigen::VectorXd& x) {
    if (result_.evaluations >= budget_) throw BudgetExhausted{};
    const double value = f_(x);
    ++result_.evaluations;
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "optimizer: objective returned " << value << " at [" << x.transpose() << "]";
      throw ContractError(msg.str());
    }
    if (result_.trace.empty() || value < result_.best_value) {
      result_.best_value = value;
      result_.best_params = x;
      result_.trace.push_back({x, value});
    }
    return value;
  }

 private:
  const Objective& f_;
  int budget_;
  OptResult& result_;
};

bool lexicographically_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

OptResult nelder_mead(const Objective& f, const Eigen::VectorXd& x0, const OptimizerConfig& cfg) {
  cfg.validate();
  const auto d = x0.size();
  if (d < 1) throw ContractError("nelder_mead: need at least one dimension");
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

  OptResult result;
  result.starts = 1;
  const auto t0 = std::chrono::steady_clock::now();
  CountingObjective eval(f, cfg.max_evals, result);

  std::vector<Eigen::VectorXd> x(d + 1, x0);
  std::vector<double> fx(d + 1);
  try {
    for (Eigen::Index i = 0; i < d; ++i) x[i + 1][i] += cfg.initial_step;
    for (Eigen::Index i = 0; i <= d; ++i) fx[i] = eval(x[i]);

    std::vector<Eigen::Index> order(d + 1);
    while (true) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fx[a] < fx[b]; });
      {
        std::vector<Eigen::VectorXd> xs;
        std::vector<double> fs;
        for (auto i : order) {
          xs.push_back(x[i]);
          fs.push_back(fx[i]);
        }
        x = std::move(xs);
        fx = std::move(fs);
      }

      double diameter = 0.0;
      for (Eigen::Index i = 1; i <= d; ++i) diameter = std::max(diameter, (x[i] - x[0]).cwiseAbs().maxCoeff());
      if (fx[d] - fx[0] <= cfg.f_tol || diameter <= cfg.x_tol) break;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
      for (Eigen::Index i = 0; i < d; ++i) centroid += x[i];
      centroid /= static_cast<double>(d);

      const Eigen::VectorXd xr = centroid + kReflect * (centroid - x[d]);
      const double fr = eval(xr);
      if (fr < fx[0]) {
        const Eigen::VectorXd xe = centroid + kExpand * (xr - centroid);
        const double fe = eval(xe);
        if (fe < fr) {
          x[d] = xe;
          fx[d] = fe;
        } else {
          x[d] = xr;
          fx[d] = fr;
        }
        continue;
      }
      if (fr < fx[d - 1]) {
        x[d] = xr;
        fx[d] = fr;
        continue;
      }
      bool shrink = false;
      if (fr < fx[d]) {
        const Eigen::VectorXd xc = centroid + kContract * (xr - centroid);
        const double fc = eval(xc);
        if (fc <= fr) {
          x[d] = xc;
          fx[d] = fc;
        } else {
          shrink = true;
        }
      } else {
        const Eigen::VectorXd xc = centroid + kContract * (x[d] - centroid);
        const double fc = eval(xc);
        if (fc < fx[d]) {
          x[d] = xc;
          fx[d] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink)
        for (Eigen::Index i = 1; i <= d; ++i) {
          x[i] = x[0] + kShrink * (x[i] - x[0]);
          fx[i] = eval(x[i]);
        }
    }
  } catch (const BudgetExhausted&) {
  }
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

OptResult multistart_nelder_mead(const Objective& f, const std::vector<Eigen::VectorXd>& starts,
                                 const OptimizerConfig& cfg) {
  if (starts.empty()) throw ContractError("multistart: no start points");
  const auto t0 = std::chrono::steady_clock::now();
  OptResult merged;
  bool have_best = false;
  for (const auto& x0 : starts) {
    OptResult local = nelder_mead(f, x0, cfg);
    merged.evaluations += local.evaluations;
    ++merged.starts;
    bool better = false;
    if (!have_best) {
      better = true;
    } else {
      const double tol = 1e-9 * std::max(1.0, std::abs(merged.best_value));
      if (local.best_value < merged.best_value - tol)
        better = true;
      else if (std::abs(local.best_value - merged.best_value) <= tol)
        better = lexicographically_less(local.best_params, merged.best_params);
    }
    for (const auto& point : local.trace)
      if (!have_best || point.value < merged.trace.back().value) {
        merged.trace.push_back(point);
        have_best = true;
      }
    if (better) {
      merged.best_params = local.best_params;
      merged.best_value = local.best_value;
      have_best = true;
    }
  }
  merged.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return merged;
}

}  // namespace aaqaoa
