#include <cstring>
#include <fstream>
#include <unordered_map>

#include "aaqaoa/simulator.hpp"

namespace aaqaoa {

PhaseOperator::PhaseOperator(const IsingHamiltonian& h) : n_(h.n), diagonal_(energy_diagonal(h)) {
  const std::size_t max_levels = std::max<std::size_t>(16, static_cast<std::size_t>(diagonal_.size()) / 8);
  std::unordered_map<double, std::uint32_t> index;
  level_of_.resize(static_cast<std::size_t>(diagonal_.size()));
  for (Eigen::Index x = 0; x < diagonal_.size(); ++x) {
    auto [it, inserted] = index.try_emplace(diagonal_[x], static_cast<std::uint32_t>(levels_.size()));
    if (inserted) {
      if (levels_.size() == max_levels) {
        levels_.clear();
        level_of_.clear();
        return;
      }
      levels_.push_back(diagonal_[x]);
    }
    level_of_[x] = it->second;
  }
}

Eigen::VectorXd AnsatzParams::flatten() const {
  validate();
  const int p = layers();
  Eigen::VectorXd theta(2 * p);
  for (int l = 0; l < p; ++l) {
    theta[l] = betas[l];
    theta[p + l] = gammas[l];
  }
  return theta;
}

AnsatzParams AnsatzParams::unflatten(const Eigen::VectorXd& theta) {
  if (theta.size() < 2 || theta.size() % 2 != 0)
    throw ContractError("ansatz params: flat vector must have even length >= 2");
  const auto p = theta.size() / 2;
  AnsatzParams params;
  for (Eigen::Index l = 0; l < p; ++l) {
    params.betas.push_back(theta[l]);
    params.gammas.push_back(theta[p + l]);
  }
  return params;
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw ContractError("state dump: truncated file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

}  // namespace

void write_state_dump(const StateVector& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("state dump: cannot open " + path);
  put_le<std::uint64_t>(out, static_cast<std::uint64_t>(s.num_qubits()));
  for (Eigen::Index x = 0; x < s.dimension(); ++x) {
    put_le<double>(out, s[x].real());
    put_le<double>(out, s[x].imag());
  }
}

StateVector read_state_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("state dump: cannot open " + path);
  const auto n = get_le<std::uint64_t>(in);
  if (n < 1 || n > 40) throw ContractError("state dump: implausible qubit count");
  StateVector::Amplitudes amps(Eigen::Index{1} << n);
  for (Eigen::Index x = 0; x < amps.size(); ++x) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    amps[x] = {re, im};
  }
  return StateVector(static_cast<int>(n), std::move(amps));
}

}  // namespace aaqaoa
