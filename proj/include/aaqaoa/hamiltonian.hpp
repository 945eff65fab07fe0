#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <json.hpp>

#include "aaqaoa/automorphism.hpp"
#include "aaqaoa/graph.hpp"

namespace aaqaoa {

/// Computational basis state; bit i is qubit (vertex) i.
using BasisIndex = std::uint64_t;

/// "010" -> index with qubit 1 set. Character i is qubit i.
BasisIndex parse_bitstring(std::string_view bits);
std::string format_bitstring(BasisIndex x, int n);

/// Symmetric, zero-diagonal QUBO matrix stored as its upper triangle.
class QuboMatrix {
 public:
  explicit QuboMatrix(int n = 0) : n_(n) {}

  int size() const { return n_; }
  /// Accumulates `value` into entry (u,v); throws on the diagonal.
  void add(Vertex u, Vertex v, double value);
  double operator()(Vertex u, Vertex v) const;
  const std::map<Edge, double>& entries() const { return entries_; }
  double total() const;

  /// Dense symmetric view, used by the CLI and in tests.
  Eigen::MatrixXd dense() const;

 private:
  int n_;
  std::map<Edge, double> entries_;
};

/// Unit entry for every edge.
QuboMatrix build_full_qubo(const Graph& g);

/// Only class representatives survive, each carrying its class size.
QuboMatrix build_reduced_qubo(const Graph& g, const EdgeClassPartition& classes);

/// How a QUBO entry (u,v,w) becomes Pauli terms.
///  - maxcut:    w/2 (1 - Z_u Z_v); energy of a basis state is its cut weight.
///  - adjacency: w x_u x_v with x = (1 - Z)/2; w/4 (1 - Z_u - Z_v + Z_u Z_v).
enum class Convention { maxcut, adjacency };

std::string to_string(Convention c);
Convention parse_convention(std::string_view name);

struct TermCount {
  int linear = 0;
  int quadratic = 0;
  int total() const { return linear + quadratic; }
};

/// Diagonal Hamiltonian: offset + sum c_i Z_i + sum c_uv Z_u Z_v.
/// Only nonzero coefficients are stored.
struct IsingHamiltonian {
  int n = 0;
  Convention convention = Convention::maxcut;
  double offset = 0.0;
  std::map<Vertex, double> linear;
  std::map<Edge, double> quadratic;

  TermCount term_count() const {
    return {static_cast<int>(linear.size()), static_cast<int>(quadratic.size())};
  }
};

IsingHamiltonian qubo_to_ising(const QuboMatrix& q, Convention c);

inline TermCount term_count(const IsingHamiltonian& h) { return h.term_count(); }

/// 100 (1 - red/full), rounded half-up to two decimals.
double reduction_percentage(int full_terms, int reduced_terms);
/// Throws ContractError if the conventions or qubit counts differ.
double reduction_percentage(const IsingHamiltonian& full, const IsingHamiltonian& reduced);

/// Diagonal entry <x|H|x>; z_i = +1 for bit 0, -1 for bit 1.
double energy(const IsingHamiltonian& h, BasisIndex x);
double energy(const IsingHamiltonian& h, std::string_view bits);

/// Every diagonal entry, indexed by basis state.
Eigen::VectorXd energy_diagonal(const IsingHamiltonian& h);

int cut_value(const Graph& g, BasisIndex x);
int cut_value(const Graph& g, std::string_view bits);

nlohmann::json to_json(const IsingHamiltonian& h);
IsingHamiltonian hamiltonian_from_json(const nlohmann::json& j);

}  // namespace aaqaoa
