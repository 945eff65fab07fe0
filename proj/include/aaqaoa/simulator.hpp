#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aaqaoa/automorphism.hpp"
#include "aaqaoa/errors.hpp"
#include "aaqaoa/hamiltonian.hpp"

namespace aaqaoa {

/// 2^26 complex doubles is 1 GiB.
inline constexpr int kDefaultQubitCap = 26;

/// Dense statevector over n qubits; basis index bit i is qubit i.
template <typename Real>
class BasicStateVector {
 public:
  using Complex = std::complex<Real>;
  using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  BasicStateVector() = default;
  BasicStateVector(int n, Amplitudes amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (amps_.size() != (Eigen::Index{1} << n)) throw ContractError("statevector: size is not 2^n");
  }

  int num_qubits() const { return n_; }
  Eigen::Index dimension() const { return amps_.size(); }
  const Amplitudes& amplitudes() const { return amps_; }
  Amplitudes& amplitudes() { return amps_; }
  Complex operator[](Eigen::Index x) const { return amps_[x]; }

  Real norm_squared() const { return amps_.squaredNorm(); }
  Eigen::Matrix<Real, Eigen::Dynamic, 1> probabilities() const { return amps_.cwiseAbs2(); }

 private:
  int n_ = 0;
  Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;

inline void check_qubit_count(int n, int cap, std::size_t bytes_per_amplitude) {
  if (n < 1) throw ContractError("statevector: need at least one qubit");
  if (n > cap || n > 62) {
    double gib = std::ldexp(static_cast<double>(bytes_per_amplitude), n) / (1024.0 * 1024.0 * 1024.0);
    throw ResourceError("statevector: " + std::to_string(n) + " qubits needs " + std::to_string(gib) +
                        " GiB, above the cap of " + std::to_string(cap) + " qubits");
  }
}

/// |+>^n.
template <typename Real = double>
BasicStateVector<Real> init_plus(int n, int qubit_cap = kDefaultQubitCap) {
  using State = BasicStateVector<Real>;
  check_qubit_count(n, qubit_cap, sizeof(typename State::Complex));
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Real amp = std::pow(Real(2), Real(-0.5) * n);
  return State(n, State::Amplitudes::Constant(dim, typename State::Complex(amp, 0)));
}

template <typename Real = double>
BasicStateVector<Real> basis_state(int n, BasisIndex x, int qubit_cap = kDefaultQubitCap) {
  using State = BasicStateVector<Real>;
  check_qubit_count(n, qubit_cap, sizeof(typename State::Complex));
  typename State::Amplitudes amps = State::Amplitudes::Zero(Eigen::Index{1} << n);
  amps[static_cast<Eigen::Index>(x)] = 1;
  return State(n, std::move(amps));
}

namespace detail {

// Plain product; std::complex operator* takes the slow Annex G path.
template <typename Real>
inline std::complex<Real> mul(std::complex<Real> a, std::complex<Real> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <typename Real>
inline void scale(std::complex<Real>* a, Eigen::Index count, std::complex<Real> w) {
  for (Eigen::Index k = 0; k < count; ++k) a[k] = mul(a[k], w);
}

}  // namespace detail

/// e^{-i theta Z_q}.
template <typename Real>
void apply_z_phase(BasicStateVector<Real>& s, int q, double theta) {
  const std::complex<Real> even(std::cos(theta), -std::sin(theta)), odd(std::cos(theta), std::sin(theta));
  auto* a = s.amplitudes().data();
  const Eigen::Index stride = Eigen::Index{1} << q;
  for (Eigen::Index block = 0; block < s.dimension(); block += 2 * stride) {
    detail::scale(a + block, stride, even);
    detail::scale(a + block + stride, stride, odd);
  }
}

/// e^{-i theta Z_u Z_v}: phase e^{-i theta} on even parity, e^{+i theta} on odd.
template <typename Real>
void apply_zz_phase(BasicStateVector<Real>& s, int u, int v, double theta) {
  if (u > v) std::swap(u, v);
  const std::complex<Real> phase[2] = {{static_cast<Real>(std::cos(theta)), static_cast<Real>(-std::sin(theta))},
                                       {static_cast<Real>(std::cos(theta)), static_cast<Real>(std::sin(theta))}};
  auto* a = s.amplitudes().data();
  const Eigen::Index lo = Eigen::Index{1} << u, hi = Eigen::Index{1} << v;
  for (Eigen::Index base = 0; base < s.dimension(); base += 2 * hi)
    for (int high_bit = 0; high_bit < 2; ++high_bit) {
      auto* half = a + base + high_bit * hi;
      for (Eigen::Index block = 0; block < hi; block += 2 * lo) {
        detail::scale(half + block, lo, phase[high_bit]);
        detail::scale(half + block + lo, lo, phase[1 - high_bit]);
      }
    }
}

/// Diagonal of a Hamiltonian, prepared for repeated e^{-i gamma H}.
///
/// Energies of MaxCut-type Hamiltonians take few distinct values, so each
/// basis state stores an index into a level table and a layer costs one
/// sincos per level instead of per amplitude.
class PhaseOperator {
 public:
  explicit PhaseOperator(const IsingHamiltonian& h);

  int num_qubits() const { return n_; }
  const Eigen::VectorXd& diagonal() const { return diagonal_; }
  std::size_t num_levels() const { return levels_.size(); }

  template <typename Real>
  void apply(BasicStateVector<Real>& s, double gamma) const {
    if (s.num_qubits() != n_) throw ContractError("phase separator: qubit count mismatch");
    auto* a = s.amplitudes().data();
    const Eigen::Index dim = s.dimension();
    if (levels_.empty()) {
      for (Eigen::Index x = 0; x < dim; ++x)
        a[x] = detail::mul(a[x], std::polar(Real(1), static_cast<Real>(-gamma * diagonal_[x])));
      return;
    }
    std::vector<std::complex<Real>> table(levels_.size());
    for (std::size_t k = 0; k < levels_.size(); ++k)
      table[k] = std::polar(Real(1), static_cast<Real>(-gamma * levels_[k]));
    for (Eigen::Index x = 0; x < dim; ++x) a[x] = detail::mul(a[x], table[level_of_[x]]);
  }

 private:
  int n_;
  Eigen::VectorXd diagonal_;
  std::vector<double> levels_;
  std::vector<std::uint32_t> level_of_;
};

/// Multiplies the amplitude of |x> by e^{-i gamma E(x)}.
template <typename Real>
void apply_phase_separator(BasicStateVector<Real>& s, const IsingHamiltonian& h, double gamma) {
  PhaseOperator(h).apply(s, gamma);
}

/// e^{-i beta X} on every qubit: (a, b) -> (a cos - i b sin, b cos - i a sin).
template <typename Real>
void apply_mixer(BasicStateVector<Real>& s, double beta) {
  const Real c = static_cast<Real>(std::cos(beta));
  const Real sn = static_cast<Real>(std::sin(beta));
  auto* a = s.amplitudes().data();
  const Eigen::Index dim = s.dimension();
  for (int q = 0; q < s.num_qubits(); ++q) {
    const Eigen::Index stride = Eigen::Index{1} << q;
    for (Eigen::Index block = 0; block < dim; block += 2 * stride) {
      auto* lo = a + block;
      auto* hi = lo + stride;
      for (Eigen::Index k = 0; k < stride; ++k) {
        const auto x = lo[k], y = hi[k];
        // -i*sn*y = (sn*y.imag, -sn*y.real)
        lo[k] = {c * x.real() + sn * y.imag(), c * x.imag() - sn * y.real()};
        hi[k] = {c * y.real() + sn * x.imag(), c * y.imag() - sn * x.real()};
      }
    }
  }
}

/// Angles of a p-layer ansatz, layer l uses (gammas[l], betas[l]).
struct AnsatzParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  int layers() const { return static_cast<int>(betas.size()); }
  void validate() const {
    if (betas.empty() || betas.size() != gammas.size())
      throw ContractError("ansatz params: need equally many betas and gammas, at least one layer");
  }
  /// Flat layout (beta_1..beta_p, gamma_1..gamma_p).
  Eigen::VectorXd flatten() const;
  static AnsatzParams unflatten(const Eigen::VectorXd& theta);
};

/// prod_l e^{-i beta_l H_M} e^{-i gamma_l H} |+>^n, phase separator first.
template <typename Real = double>
BasicStateVector<Real> build_qaoa_state(const PhaseOperator& phase, const AnsatzParams& params,
                                        int qubit_cap = kDefaultQubitCap) {
  params.validate();
  auto s = init_plus<Real>(phase.num_qubits(), qubit_cap);
  for (int l = 0; l < params.layers(); ++l) {
    phase.apply(s, params.gammas[l]);
    apply_mixer(s, params.betas[l]);
  }
  return s;
}

template <typename Real = double>
BasicStateVector<Real> build_qaoa_state(const IsingHamiltonian& h_ansatz, const AnsatzParams& params,
                                        int qubit_cap = kDefaultQubitCap) {
  check_qubit_count(h_ansatz.n, qubit_cap, sizeof(std::complex<Real>));
  return build_qaoa_state<Real>(PhaseOperator(h_ansatz), params, qubit_cap);
}

/// e^{-i gamma H} as its circuit: one ZZ (or Z) phase gate per stored term.
/// Differs from the diagonal form only by the global phase e^{-i gamma offset}.
template <typename Real>
void apply_phase_gates(BasicStateVector<Real>& s, const IsingHamiltonian& h, double gamma) {
  if (h.n != s.num_qubits()) throw ContractError("phase separator: qubit count mismatch");
  for (const auto& [uv, c] : h.quadratic) apply_zz_phase(s, uv.first, uv.second, gamma * c);
  for (const auto& [q, c] : h.linear) apply_z_phase(s, q, gamma * c);
}

/// Gate-by-gate ansatz written into `s` (resized as needed), so repeated
/// evaluations can reuse one buffer.
template <typename Real>
void prepare_qaoa_circuit(BasicStateVector<Real>& s, const IsingHamiltonian& h_ansatz, const AnsatzParams& params,
                          int qubit_cap = kDefaultQubitCap) {
  params.validate();
  check_qubit_count(h_ansatz.n, qubit_cap, sizeof(std::complex<Real>));
  const Eigen::Index dim = Eigen::Index{1} << h_ansatz.n;
  const Real amp = std::pow(Real(2), Real(-0.5) * h_ansatz.n);
  if (s.num_qubits() != h_ansatz.n) s = BasicStateVector<Real>(h_ansatz.n, BasicStateVector<Real>::Amplitudes::Zero(dim));
  s.amplitudes().setConstant(std::complex<Real>(amp, 0));
  for (int l = 0; l < params.layers(); ++l) {
    apply_phase_gates(s, h_ansatz, params.gammas[l]);
    apply_mixer(s, params.betas[l]);
  }
}

/// A|x> = |a(x)>: bit i of x moves to bit perm(i).
template <typename Real>
BasicStateVector<Real> permute_statevector(const BasicStateVector<Real>& s, const Permutation& perm) {
  if (perm.size() != s.num_qubits()) throw ContractError("permute_statevector: permutation size mismatch");
  typename BasicStateVector<Real>::Amplitudes out(s.dimension());
  const int n = s.num_qubits();
  for (Eigen::Index x = 0; x < s.dimension(); ++x) {
    Eigen::Index y = 0;
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1) y |= Eigen::Index{1} << perm(i);
    out[y] = s[x];
  }
  return BasicStateVector<Real>(n, std::move(out));
}

/// <prod_{q in qubits} Z_q>.
template <typename Real>
double pauli_z_expectation(const BasicStateVector<Real>& s, const std::vector<Vertex>& qubits) {
  if (qubits.empty()) throw ContractError("pauli_z_expectation: empty qubit set");
  BasisIndex mask = 0;
  for (Vertex q : qubits) {
    if (q < 0 || q >= s.num_qubits()) throw ContractError("pauli_z_expectation: qubit out of range");
    mask |= BasisIndex{1} << q;
  }
  double sum = 0.0;
  for (Eigen::Index x = 0; x < s.dimension(); ++x) {
    const double p = std::norm(s[x]);
    sum += (std::popcount(static_cast<BasisIndex>(x) & mask) & 1) ? -p : p;
  }
  return sum;
}

enum class ExpectationMode { per_term, fused };

namespace detail {

template <typename Vec>
double contiguous_sum(const Vec& probs, Eigen::Index start, Eigen::Index count) {
  return probs.segment(start, count).sum();
}

// sum_x p[x] (-1)^(x_a + x_b); pass b < 0 for a single-qubit term.
template <typename Vec>
double signed_sum(const Vec& probs, int a, int b = -1) {
  const Eigen::Index dim = probs.size();
  double even = 0.0, odd = 0.0;
  if (b < 0) {
    const Eigen::Index stride = Eigen::Index{1} << a;
    for (Eigen::Index block = 0; block < dim; block += 2 * stride) {
      even += contiguous_sum(probs, block, stride);
      odd += contiguous_sum(probs, block + stride, stride);
    }
    return even - odd;
  }
  if (a > b) std::swap(a, b);
  const Eigen::Index lo = Eigen::Index{1} << a, hi = Eigen::Index{1} << b;
  if (lo == 1) {
    // Adjacent-parity pattern; avoid one-element segments.
    const auto* p = probs.data();
    for (Eigen::Index base = 0; base < dim; base += 2 * hi)
      for (Eigen::Index k = 0; k < hi; k += 2) {
        even += p[base + k] + p[base + hi + k + 1];
        odd += p[base + k + 1] + p[base + hi + k];
      }
    return even - odd;
  }
  for (Eigen::Index base = 0; base < dim; base += 2 * hi)
    for (Eigen::Index block = 0; block < hi; block += 2 * lo) {
      even += contiguous_sum(probs, base + block, lo) + contiguous_sum(probs, base + hi + block + lo, lo);
      odd += contiguous_sum(probs, base + block + lo, lo) + contiguous_sum(probs, base + hi + block, lo);
    }
  return even - odd;
}

}  // namespace detail

/// sum over stored terms of c * <term>, one pass over `probs` per term.
inline double per_term_expectation(const Eigen::VectorXd& probs, const IsingHamiltonian& h) {
  if (probs.size() != (Eigen::Index{1} << h.n)) throw ContractError("expectation: qubit count mismatch");
  double value = h.offset * probs.sum();
  for (const auto& [q, c] : h.linear) value += c * detail::signed_sum(probs, q);
  for (const auto& [uv, c] : h.quadratic) value += c * detail::signed_sum(probs, uv.first, uv.second);
  return value;
}

/// <psi|H|psi>. per_term makes one pass over the probabilities for each
/// stored Pauli term; fused contracts against the full diagonal at once.
template <typename Real>
double expectation(const BasicStateVector<Real>& s, const IsingHamiltonian& h,
                   ExpectationMode mode = ExpectationMode::per_term) {
  if (h.n != s.num_qubits()) throw ContractError("expectation: qubit count mismatch");
  const Eigen::VectorXd probs = s.probabilities().template cast<double>();
  if (mode == ExpectationMode::fused) return probs.dot(energy_diagonal(h));
  return per_term_expectation(probs, h);
}

/// Fused evaluation against a precomputed diagonal.
template <typename Real>
double expectation(const BasicStateVector<Real>& s, const PhaseOperator& diagonal) {
  if (diagonal.num_qubits() != s.num_qubits()) throw ContractError("expectation: qubit count mismatch");
  return s.probabilities().template cast<double>().dot(diagonal.diagonal());
}

/// Largest |<Z_u Z_v> - <Z_r Z_s>| over member edges (u,v) and their class
/// representative (r,s). Zero on a state invariant under the edge group.
template <typename Real>
double verify_orbit_symmetry(const BasicStateVector<Real>& s, const EdgeClassPartition& classes) {
  double worst = 0.0;
  const Eigen::VectorXd probs = s.probabilities().template cast<double>();
  auto zz = [&](const Edge& e) {
    if (e.second >= s.num_qubits()) throw ContractError("verify_orbit_symmetry: class edge outside the state");
    return detail::signed_sum(probs, e.first, e.second);
  };
  for (const auto& c : classes.classes) {
    const double rep = zz(c.representative);
    for (const auto& e : c.edges) worst = std::max(worst, std::abs(zz(e) - rep));
  }
  return worst;
}

/// `shots` i.i.d. draws from |amplitude|^2 by inverse-CDF sampling on a
/// mt19937_64 stream; identical seeds give identical draws on any platform.
template <typename Real>
std::vector<BasisIndex> sample_bitstrings(const BasicStateVector<Real>& s, int shots, std::uint64_t seed) {
  if (shots < 1) throw ContractError("sample_bitstrings: shots must be >= 1");
  std::vector<double> cdf(static_cast<std::size_t>(s.dimension()));
  double acc = 0.0;
  for (Eigen::Index x = 0; x < s.dimension(); ++x) cdf[x] = acc += std::norm(s[x]);
  std::mt19937_64 rng(seed);
  std::vector<BasisIndex> draws;
  draws.reserve(shots);
  for (int k = 0; k < shots; ++k) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    draws.push_back(static_cast<BasisIndex>(it - cdf.begin()));
  }
  return draws;
}

template <typename Real>
double fidelity(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

/// Debug dump: 8-byte little-endian n, then 2^n (re, im) little-endian doubles.
void write_state_dump(const StateVector& s, const std::string& path);
StateVector read_state_dump(const std::string& path);

}  // namespace aaqaoa
