#pragma once

#include <vector>

#include "aaqaoa/graph.hpp"
#include "aaqaoa/hamiltonian.hpp"
#include "aaqaoa/nelder_mead.hpp"
#include "aaqaoa/simulator.hpp"

namespace aaqaoa {

/// How an objective evaluation obtains <H_measure> on the ansatz state.
///  - statevector: simulate the whole register, then one pass per term.
///  - lightcone:   simulate only the union of the measured terms' reverse
///                 causal cones (vertices within p of a term's support, with
///                 the ansatz terms they induce), then one pass per term.
///                 Gates outside that set commute through, so the value is
///                 the same; the cost scales with the cone, not the graph.
enum class Estimator { lightcone, statevector };

std::string to_string(Estimator e);
Estimator parse_estimator(std::string_view name);

/// <psi(beta, gamma)| H_measure |psi(beta, gamma)> for an ansatz built from
/// H_ansatz. The ansatz runs gate by gate (one phase gate per term, one X
/// rotation per qubit) in a buffer reused across calls, so a single object
/// must not be evaluated from several threads at once.
class QaoaObjective {
 public:
  QaoaObjective(const IsingHamiltonian& h_ansatz, const IsingHamiltonian& h_measure, int layers,
                Estimator estimator = Estimator::lightcone, int qubit_cap = kDefaultQubitCap);

  double expectation(const AnsatzParams& params) const;

  int layers() const { return layers_; }
  /// Register size actually simulated per evaluation.
  int simulated_qubits() const { return ansatz_.n; }
  /// Original labels of the simulated qubits, ascending.
  const std::vector<Vertex>& simulated_vertices() const { return vertices_; }

 private:
  int layers_;
  int qubit_cap_;
  std::vector<Vertex> vertices_;
  IsingHamiltonian ansatz_;
  IsingHamiltonian measure_;
  mutable StateVector work_;
  mutable Eigen::VectorXd probs_;
};

/// Restriction of `h` to `vertices` (sorted): keeps terms supported inside
/// the set and relabels qubits 0..k-1 in ascending order.
IsingHamiltonian restrict_hamiltonian(const IsingHamiltonian& h, const std::vector<Vertex>& vertices);

/// Default p = 1 starts: beta in {k pi/16}, gamma in {k pi/8}, k = 1..7.
std::vector<Eigen::VectorXd> default_start_grid(int layers, const OptimizerConfig& cfg);

/// Maximises <H_measure> over (beta, gamma) by minimising its negation with
/// multistart Nelder-Mead. The ansatz always uses h_ansatz (the full graph).
/// wall_time covers the optimisation loop only, not objective setup.
OptResult optimize_qaoa(const Graph& g, const IsingHamiltonian& h_measure, const IsingHamiltonian& h_ansatz,
                        int layers, const OptimizerConfig& cfg, Estimator estimator = Estimator::lightcone,
                        int qubit_cap = kDefaultQubitCap);

}  // namespace aaqaoa
