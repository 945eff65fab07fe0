#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "aaqaoa/automorphism.hpp"
#include "aaqaoa/errors.hpp"
#include "aaqaoa/simulator.hpp"
#include "test_support.hpp"

using namespace aaqaoa;
using std::numbers::pi;

namespace {

using CMatrix = Eigen::MatrixXcd;

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  StateVector::Amplitudes a(Eigen::Index{1} << n);
  for (auto& z : a) z = {gauss(rng), gauss(rng)};
  a /= a.norm();
  return StateVector(n, a);
}

AnsatzParams random_params(int layers, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-pi, pi);
  AnsatzParams p;
  for (int l = 0; l < layers; ++l) {
    p.betas.push_back(angle(rng));
    p.gammas.push_back(angle(rng));
  }
  return p;
}

// Dense reference: e^{-i beta sum X} e^{-i gamma H} ... |+>, with both
// exponentials taken by the matrix exponential of the dense generator.
Eigen::VectorXcd dense_qaoa(const IsingHamiltonian& h, const AnsatzParams& params) {
  const Eigen::Index dim = Eigen::Index{1} << h.n;
  const Eigen::VectorXd diag = energy_diagonal(h);
  CMatrix hc = CMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) hc(x, x) = diag[x];
  CMatrix hm = CMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x)
    for (int q = 0; q < h.n; ++q) hm(x ^ (Eigen::Index{1} << q), x) += 1.0;
  const std::complex<double> minus_i(0, -1);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (int l = 0; l < params.layers(); ++l) {
    psi = CMatrix((minus_i * params.gammas[l] * hc).exp()) * psi;
    psi = CMatrix((minus_i * params.betas[l] * hm).exp()) * psi;
  }
  return psi;
}

IsingHamiltonian maxcut(const Graph& g) { return qubo_to_ising(build_full_qubo(g), Convention::maxcut); }

double norm_error(const StateVector& s) { return std::abs(1.0 - s.amplitudes().squaredNorm()); }

}  // namespace

TEST_CASE("uniform superposition") {
  const auto one = init_plus<double>(1);
  CHECK(one[0] == std::complex<double>(std::sqrt(0.5), 0));
  CHECK(one[1] == std::complex<double>(std::sqrt(0.5), 0));
  const auto two = init_plus<double>(2);
  for (Eigen::Index x = 0; x < 4; ++x) CHECK(std::abs(two[x] - 0.5) < 1e-15);
  CHECK_THROWS_AS(init_plus<double>(27), ResourceError);
  CHECK_THROWS_AS(init_plus<double>(5, 4), ResourceError);
  CHECK(init_plus<float>(3).dimension() == 8);
}

TEST_CASE("phase separator") {
  const auto h = maxcut(star_graph(2));
  auto s = init_plus<double>(2);
  apply_phase_separator(s, h, 0.0);
  CHECK((s.amplitudes() - init_plus<double>(2).amplitudes()).norm() < 1e-15);
  apply_phase_separator(s, h, pi);
  CHECK(std::abs(s[0] - 0.5) < 1e-12);
  CHECK(std::abs(s[1] + 0.5) < 1e-12);
  CHECK(std::abs(s[2] + 0.5) < 1e-12);
  CHECK(std::abs(s[3] - 0.5) < 1e-12);
  CHECK_THROWS_AS(apply_phase_separator(s, maxcut(path_graph(3)), 0.1), ContractError);
}

TEST_CASE("mixer") {
  auto zero = basis_state<double>(1, 0);
  apply_mixer(zero, pi / 2);
  CHECK(std::abs(zero[0]) < 1e-15);
  CHECK(std::abs(zero[1] - std::complex<double>(0, -1)) < 1e-15);

  auto plus = init_plus<double>(4);
  apply_mixer(plus, 0.0);
  CHECK(fidelity(plus, init_plus<double>(4)) == doctest::Approx(1.0).epsilon(1e-15));
  apply_mixer(plus, 0.731);
  CHECK(std::abs(fidelity(plus, init_plus<double>(4)) - 1.0) < 1e-12);
}

TEST_CASE("norm is preserved by every gate") {
  std::mt19937_64 rng(1);
  const auto g = full_rary_tree(2, 8);
  const auto h = maxcut(g);
  const auto adj = qubo_to_ising(build_full_qubo(g), Convention::adjacency);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_state(8, rng);
    apply_phase_separator(s, h, angle(rng));
    CHECK(norm_error(s) <= 1e-12);
    apply_phase_gates(s, adj, angle(rng));
    CHECK(norm_error(s) <= 1e-12);
    apply_mixer(s, angle(rng));
    CHECK(norm_error(s) <= 1e-12);
  }
}

TEST_CASE("K2 closed form") {
  const auto h = maxcut(star_graph(2));
  const auto s = build_qaoa_state<double>(h, AnsatzParams{{pi / 8}, {pi / 2}});
  CHECK(expectation(s, h) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_params(1, rng);
    const double closed = 0.5 + 0.5 * std::sin(4 * p.betas[0]) * std::sin(p.gammas[0]);
    const auto st = build_qaoa_state<double>(h, p);
    CHECK(std::abs(expectation(st, h, ExpectationMode::per_term) - closed) < 1e-12);
    CHECK(std::abs(expectation(st, h, ExpectationMode::fused) - closed) < 1e-12);
  }
}

TEST_CASE("ansatz matches dense matrix exponentials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto g = testsupport::random_tree(5, rng);
    for (auto conv : {Convention::maxcut, Convention::adjacency}) {
      const auto h = qubo_to_ising(build_full_qubo(g), conv);
      const auto p = random_params(1 + trial % 3, rng);
      const Eigen::VectorXcd ref = dense_qaoa(h, p);
      const auto s = build_qaoa_state<double>(h, p);
      CHECK((s.amplitudes() - ref).norm() < 1e-10);
      // The gate-wise circuit differs by a global phase only.
      StateVector circuit;
      prepare_qaoa_circuit(circuit, h, p);
      CHECK(std::abs(std::norm(ref.dot(circuit.amplitudes())) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("zero angles give the uniform state and half the edges") {
  const auto g = full_rary_tree(2, 9);
  const auto h = maxcut(g);
  const auto s = build_qaoa_state<double>(h, AnsatzParams{{0, 0}, {0, 0}});
  CHECK(std::abs(fidelity(s, init_plus<double>(9)) - 1.0) < 1e-12);
  CHECK(expectation(s, h) == doctest::Approx(g.num_edges() / 2.0).epsilon(1e-12));
  CHECK(verify_orbit_symmetry(s, edge_equivalence_classes(g)) <= 1e-12);
}

TEST_CASE("pauli z expectations") {
  const auto plus = init_plus<double>(3);
  CHECK(std::abs(pauli_z_expectation(plus, {0})) < 1e-12);
  CHECK(std::abs(pauli_z_expectation(plus, {0, 2})) < 1e-12);
  const auto s = basis_state<double>(2, parse_bitstring("01"));
  CHECK(pauli_z_expectation(s, {0, 1}) == -1.0);
  CHECK(pauli_z_expectation(s, {0}) == 1.0);
  CHECK(pauli_z_expectation(s, {1}) == -1.0);
  CHECK_THROWS_AS(pauli_z_expectation(s, {}), ContractError);
  CHECK_THROWS_AS(pauli_z_expectation(s, {2}), ContractError);
}

TEST_CASE("per-term and fused expectations agree on random states and trees") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> size(2, 10);
    const auto g = testsupport::random_tree(size(rng), rng);
    const auto s = random_state(g.num_vertices(), rng);
    for (auto conv : {Convention::maxcut, Convention::adjacency}) {
      const auto h = qubo_to_ising(build_full_qubo(g), conv);
      const double a = expectation(s, h, ExpectationMode::per_term);
      CHECK(std::abs(a - expectation(s, h, ExpectationMode::fused)) <= 1e-10);
      CHECK(std::abs(a - expectation(s, PhaseOperator(h))) <= 1e-10);
    }
  }
}

TEST_CASE("automorphisms fix the ansatz state") {
  std::mt19937_64 rng(5);
  const auto plus = init_plus<double>(6);
  CHECK(std::abs(fidelity(permute_statevector(plus, Permutation({3, 1, 5, 0, 2, 4})), plus) - 1.0) < 1e-12);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = testsupport::random_tree(9, rng);
    const auto h = maxcut(g);
    const auto s = build_qaoa_state<double>(h, random_params(2, rng));
    CHECK((permute_statevector(s, Permutation::identity(9)).amplitudes() - s.amplitudes()).norm() == 0.0);
    for (const auto& a : find_automorphism_generators(g).generators)
      CHECK(std::abs(fidelity(permute_statevector(s, a), s) - 1.0) < 1e-10);
  }
}

TEST_CASE("orbit-equal edge expectations on trees") {
  std::mt19937_64 rng(6);
  for (const auto& g : {full_rary_tree(2, 16), balanced_tree(2, 3), balanced_tree(3, 2), star_graph(16)}) {
    const auto classes = edge_equivalence_classes(g);
    const auto h = maxcut(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = build_qaoa_state<double>(h, random_params(1 + trial % 2, rng));
      CHECK(verify_orbit_symmetry(s, classes) <= 1e-9);
    }
  }
}

TEST_CASE("reduced measurement equals full measurement on the full ansatz") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> size(2, 12);
    const auto g = testsupport::random_tree(size(rng), rng);
    const auto classes = edge_equivalence_classes(g);
    for (auto conv : {Convention::maxcut, Convention::adjacency}) {
      const auto full = qubo_to_ising(build_full_qubo(g), conv);
      const auto red = qubo_to_ising(build_reduced_qubo(g, classes), conv);
      const auto s = build_qaoa_state<double>(full, random_params(1, rng));
      CHECK(std::abs(expectation(s, full) - expectation(s, red)) <= 1e-9);
    }
  }
}

TEST_CASE("sampling") {
  const auto basis = basis_state<double>(3, 5);
  for (auto x : sample_bitstrings(basis, 100, 1)) CHECK(x == 5);

  const auto plus = init_plus<double>(2);
  const auto draws = sample_bitstrings(plus, 40000, 9);
  std::array<int, 4> counts{};
  for (auto x : draws) ++counts[x];
  for (int c : counts) CHECK(std::abs(c / 40000.0 - 0.25) <= 0.01);

  CHECK(sample_bitstrings(plus, 500, 3) == sample_bitstrings(plus, 500, 3));
  CHECK(sample_bitstrings(plus, 500, 3) != sample_bitstrings(plus, 500, 4));
  CHECK_THROWS_AS(sample_bitstrings(plus, 0, 1), ContractError);
}

TEST_CASE("single precision tracks double precision") {
  const auto h = maxcut(full_rary_tree(2, 10));
  const AnsatzParams p{{0.4}, {0.9}};
  const double ref = expectation(build_qaoa_state<double>(h, p), h);
  CHECK(std::abs(expectation(build_qaoa_state<float>(h, p), h) - ref) < 1e-4);
}

TEST_CASE("ansatz params") {
  const AnsatzParams p{{0.1, 0.2}, {0.3, 0.4}};
  const auto flat = p.flatten();
  CHECK(flat.size() == 4);
  CHECK(flat[0] == 0.1);
  CHECK(flat[2] == 0.3);
  const auto back = AnsatzParams::unflatten(flat);
  CHECK(back.betas == p.betas);
  CHECK(back.gammas == p.gammas);
  CHECK_THROWS_AS(AnsatzParams::unflatten(Eigen::VectorXd(3)), ContractError);
  CHECK_THROWS_AS((AnsatzParams{{0.1}, {}}).validate(), ContractError);
}

TEST_CASE("state dump round trip") {
  std::mt19937_64 rng(8);
  const auto s = random_state(5, rng);
  const std::string path = "aaqaoa_state_dump_test.bin";
  write_state_dump(s, path);
  const auto back = read_state_dump(path);
  std::remove(path.c_str());
  CHECK(back.num_qubits() == 5);
  CHECK(back.amplitudes() == s.amplitudes());
  CHECK_THROWS_AS(read_state_dump("does/not/exist.bin"), ContractError);
}
