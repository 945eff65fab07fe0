#include "aaqaoa/qaoa.hpp"

#include <chrono>
#include <numeric>
#include <numbers>
#include <random>
#include <set>

#include "aaqaoa/errors.hpp"
#include "aaqaoa/rcc.hpp"

namespace aaqaoa {

std::string to_string(Estimator e) { return e == Estimator::lightcone ? "lightcone" : "statevector"; }

Estimator parse_estimator(std::string_view name) {
  if (name == "lightcone") return Estimator::lightcone;
  if (name == "statevector") return Estimator::statevector;
  throw ContractError("unknown estimator \"" + std::string(name) + "\"");
}

IsingHamiltonian restrict_hamiltonian(const IsingHamiltonian& h, const std::vector<Vertex>& vertices) {
  std::vector<int> index(h.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  IsingHamiltonian out;
  out.n = static_cast<int>(vertices.size());
  out.convention = h.convention;
  out.offset = h.offset;
  for (const auto& [q, c] : h.linear)
    if (index[q] >= 0) out.linear[index[q]] = c;
  for (const auto& [uv, c] : h.quadratic)
    if (index[uv.first] >= 0 && index[uv.second] >= 0) out.quadratic[{index[uv.first], index[uv.second]}] = c;
  return out;
}

namespace {

struct ConePlan {
  std::vector<Vertex> vertices;
  IsingHamiltonian ansatz;
  IsingHamiltonian measure;
};

ConePlan plan_cone(const IsingHamiltonian& h_ansatz, const IsingHamiltonian& h_measure, int layers,
                   Estimator estimator, int qubit_cap) {
  if (h_ansatz.n != h_measure.n) throw ContractError("qaoa objective: ansatz and measured Hamiltonians differ in size");
  if (layers < 1) throw ContractError("qaoa objective: need at least one layer");
  const int n = h_ansatz.n;
  std::vector<Vertex> vertices;
  if (estimator == Estimator::lightcone) {
    std::vector<Edge> couplings;
    for (const auto& [uv, c] : h_ansatz.quadratic) couplings.push_back(uv);
    const Graph interaction(n, std::move(couplings));
    std::set<Vertex> support;
    for (const auto& [q, c] : h_measure.linear) support.insert(q);
    for (const auto& [uv, c] : h_measure.quadratic) {
      support.insert(uv.first);
      support.insert(uv.second);
    }
    if (!support.empty()) vertices = distance_ball(interaction, {support.begin(), support.end()}, layers);
  }
  if (vertices.empty() || static_cast<int>(vertices.size()) == n) {
    vertices.resize(n);
    std::iota(vertices.begin(), vertices.end(), 0);
    check_qubit_count(n, qubit_cap, sizeof(std::complex<double>));
    return {std::move(vertices), h_ansatz, h_measure};
  }
  check_qubit_count(static_cast<int>(vertices.size()), qubit_cap, sizeof(std::complex<double>));
  auto ansatz = restrict_hamiltonian(h_ansatz, vertices);
  auto measure = restrict_hamiltonian(h_measure, vertices);
  return {std::move(vertices), std::move(ansatz), std::move(measure)};
}

}  // namespace

QaoaObjective::QaoaObjective(const IsingHamiltonian& h_ansatz, const IsingHamiltonian& h_measure, int layers,
                             Estimator estimator, int qubit_cap)
    : layers_(layers), qubit_cap_(qubit_cap) {
  auto plan = plan_cone(h_ansatz, h_measure, layers, estimator, qubit_cap);
  vertices_ = std::move(plan.vertices);
  ansatz_ = std::move(plan.ansatz);
  measure_ = std::move(plan.measure);
}

double QaoaObjective::expectation(const AnsatzParams& params) const {
  if (params.layers() != layers_) throw ContractError("qaoa objective: wrong number of layers");
  prepare_qaoa_circuit(work_, ansatz_, params, qubit_cap_);
  probs_ = work_.amplitudes().cwiseAbs2();
  return per_term_expectation(probs_, measure_);
}

std::vector<Eigen::VectorXd> default_start_grid(int layers, const OptimizerConfig& cfg) {
  const int dims = 2 * layers;
  std::vector<std::vector<double>> axes = cfg.grid;
  if (axes.empty()) {
    std::vector<double> betas, gammas;
    for (int k = 1; k <= 7; ++k) {
      betas.push_back(k * std::numbers::pi / 16);
      gammas.push_back(k * std::numbers::pi / 8);
    }
    for (int l = 0; l < layers; ++l) axes.push_back(betas);
    for (int l = 0; l < layers; ++l) axes.push_back(gammas);
  }
  if (static_cast<int>(axes.size()) != dims)
    throw ContractError("start grid: expected " + std::to_string(dims) + " axes, got " + std::to_string(axes.size()));
  double total = 1;
  for (const auto& axis : axes) {
    if (axis.empty()) throw ContractError("start grid: empty axis");
    total *= static_cast<double>(axis.size());
  }

  auto point = [&](const std::vector<std::size_t>& idx) {
    Eigen::VectorXd x(dims);
    for (int d = 0; d < dims; ++d) x[d] = axes[d][idx[d]];
    return x;
  };

  std::vector<Eigen::VectorXd> starts;
  if (layers == 1 || total <= cfg.max_starts) {
    std::vector<std::size_t> idx(dims, 0);
    while (true) {
      starts.push_back(point(idx));
      int d = dims - 1;
      while (d >= 0 && ++idx[d] == axes[d].size()) idx[d--] = 0;
      if (d < 0) break;
    }
    return starts;
  }
  // Large grids: centre point first, then distinct seeded draws.
  std::set<std::vector<std::size_t>> used;
  std::vector<std::size_t> centre(dims);
  for (int d = 0; d < dims; ++d) centre[d] = (axes[d].size() - 1) / 2;
  used.insert(centre);
  starts.push_back(point(centre));
  std::mt19937_64 rng(cfg.seed);
  while (static_cast<int>(starts.size()) < cfg.max_starts) {
    std::vector<std::size_t> idx(dims);
    for (int d = 0; d < dims; ++d) idx[d] = static_cast<std::size_t>(rng() % axes[d].size());
    if (used.insert(idx).second) starts.push_back(point(idx));
  }
  return starts;
}

OptResult optimize_qaoa(const Graph& g, const IsingHamiltonian& h_measure, const IsingHamiltonian& h_ansatz,
                        int layers, const OptimizerConfig& cfg, Estimator estimator, int qubit_cap) {
  if (h_ansatz.n != g.num_vertices() || h_measure.n != g.num_vertices())
    throw ContractError("optimize_qaoa: Hamiltonian size does not match the graph");
  if (h_ansatz.convention != h_measure.convention)
    throw ContractError("optimize_qaoa: ansatz and measured Hamiltonians use different conventions");
  cfg.validate();
  const QaoaObjective objective(h_ansatz, h_measure, layers, estimator, qubit_cap);
  const auto starts = default_start_grid(layers, cfg);
  // Maximise the measured energy (the cut, in the maxcut convention).
  const Objective negated = [&](const Eigen::VectorXd& theta) {
    return -objective.expectation(AnsatzParams::unflatten(theta));
  };
  const auto t0 = std::chrono::steady_clock::now();
  OptResult result = multistart_nelder_mead(negated, starts, cfg);
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace aaqaoa
