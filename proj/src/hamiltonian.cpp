#include "aaqaoa/hamiltonian.hpp"

#include <bit>
#include <cmath>

#include "aaqaoa/errors.hpp"

namespace aaqaoa {

BasisIndex parse_bitstring(std::string_view bits) {
  if (bits.size() > 64) throw ContractError("bitstring longer than 64 qubits");
  BasisIndex x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      x |= BasisIndex{1} << i;
    else if (bits[i] != '0')
      throw ContractError("bitstring may only contain '0' and '1'");
  }
  return x;
}

std::string format_bitstring(BasisIndex x, int n) {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1U) out[i] = '1';
  return out;
}

void QuboMatrix::add(Vertex u, Vertex v, double value) {
  if (u == v) throw ContractError("qubo: diagonal entries must stay zero");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ContractError("qubo: index out of range");
  entries_[make_edge(u, v)] += value;
}

double QuboMatrix::operator()(Vertex u, Vertex v) const {
  if (u == v) return 0.0;
  auto it = entries_.find(make_edge(u, v));
  return it == entries_.end() ? 0.0 : it->second;
}

double QuboMatrix::total() const {
  double sum = 0.0;
  for (const auto& [e, c] : entries_) sum += c;
  return sum;
}

Eigen::MatrixXd QuboMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [e, c] : entries_) {
    m(e.first, e.second) = c;
    m(e.second, e.first) = c;
  }
  return m;
}

QuboMatrix build_full_qubo(const Graph& g) {
  QuboMatrix q(g.num_vertices());
  for (const auto& [u, v] : g.edges()) q.add(u, v, 1.0);
  return q;
}

QuboMatrix build_reduced_qubo(const Graph& g, const EdgeClassPartition& classes) {
  if (static_cast<int>(classes.class_of.size()) != g.num_edges())
    throw ContractError("reduced qubo: edge classes were computed for a different graph");
  int covered = 0;
  QuboMatrix q(g.num_vertices());
  for (const auto& c : classes.classes) {
    for (const auto& [u, v] : c.edges)
      if (!g.has_edge(u, v)) throw ContractError("reduced qubo: class edge not in graph");
    covered += c.size();
    q.add(c.representative.first, c.representative.second, c.size());
  }
  if (covered != g.num_edges())
    throw ContractError("reduced qubo: class sizes do not sum to the edge count");
  return q;
}

std::string to_string(Convention c) { return c == Convention::maxcut ? "maxcut" : "adjacency"; }

Convention parse_convention(std::string_view name) {
  if (name == "maxcut") return Convention::maxcut;
  if (name == "adjacency") return Convention::adjacency;
  throw ContractError("unknown convention \"" + std::string(name) + "\"");
}

IsingHamiltonian qubo_to_ising(const QuboMatrix& q, Convention c) {
  IsingHamiltonian h;
  h.n = q.size();
  h.convention = c;
  for (const auto& [e, w] : q.entries()) {
    if (c == Convention::maxcut) {
      h.offset += w / 2.0;
      h.quadratic[e] -= w / 2.0;
    } else {
      h.offset += w / 4.0;
      h.linear[e.first] -= w / 4.0;
      h.linear[e.second] -= w / 4.0;
      h.quadratic[e] += w / 4.0;
    }
  }
  std::erase_if(h.linear, [](const auto& kv) { return kv.second == 0.0; });
  std::erase_if(h.quadratic, [](const auto& kv) { return kv.second == 0.0; });
  return h;
}

double reduction_percentage(int full_terms, int reduced_terms) {
  if (full_terms <= 0) throw ContractError("reduction percentage: full term count must be positive");
  // Hundredths of a percent, rounded half-up in exact integer arithmetic.
  long long num = 20000LL * (full_terms - reduced_terms) + full_terms;
  long long den = 2LL * full_terms;
  long long hundredths = num >= 0 ? num / den : -((-num + den - 1) / den);
  return static_cast<double>(hundredths) / 100.0;
}

double reduction_percentage(const IsingHamiltonian& full, const IsingHamiltonian& reduced) {
  if (full.convention != reduced.convention)
    throw ContractError("reduction percentage: Hamiltonians use different conventions");
  if (full.n != reduced.n) throw ContractError("reduction percentage: qubit counts differ");
  return reduction_percentage(full.term_count().total(), reduced.term_count().total());
}

double energy(const IsingHamiltonian& h, BasisIndex x) {
  auto z = [x](int i) { return ((x >> i) & 1U) ? -1.0 : 1.0; };
  double e = h.offset;
  for (const auto& [i, c] : h.linear) e += c * z(i);
  for (const auto& [uv, c] : h.quadratic) e += c * z(uv.first) * z(uv.second);
  return e;
}

double energy(const IsingHamiltonian& h, std::string_view bits) {
  if (static_cast<int>(bits.size()) != h.n)
    throw ContractError("energy: bitstring length " + std::to_string(bits.size()) +
                        " does not match " + std::to_string(h.n) + " qubits");
  return energy(h, parse_bitstring(bits));
}

Eigen::VectorXd energy_diagonal(const IsingHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n;
  Eigen::VectorXd diag = Eigen::VectorXd::Constant(dim, h.offset);
  for (const auto& [i, c] : h.linear) {
    const BasisIndex mask = BasisIndex{1} << i;
    for (Eigen::Index x = 0; x < dim; ++x) diag[x] += (static_cast<BasisIndex>(x) & mask) ? -c : c;
  }
  for (const auto& [uv, c] : h.quadratic) {
    const BasisIndex mask = (BasisIndex{1} << uv.first) | (BasisIndex{1} << uv.second);
    for (Eigen::Index x = 0; x < dim; ++x)
      diag[x] += (std::popcount(static_cast<BasisIndex>(x) & mask) & 1) ? -c : c;
  }
  return diag;
}

int cut_value(const Graph& g, BasisIndex x) {
  int cut = 0;
  for (const auto& [u, v] : g.edges()) cut += static_cast<int>(((x >> u) ^ (x >> v)) & 1U);
  return cut;
}

int cut_value(const Graph& g, std::string_view bits) {
  if (static_cast<int>(bits.size()) != g.num_vertices())
    throw ContractError("cut_value: bitstring length does not match the vertex count");
  return cut_value(g, parse_bitstring(bits));
}

nlohmann::json to_json(const IsingHamiltonian& h) {
  nlohmann::json linear = nlohmann::json::array();
  for (const auto& [q, c] : h.linear) linear.push_back({{"q", q}, {"c", c}});
  nlohmann::json quadratic = nlohmann::json::array();
  for (const auto& [uv, c] : h.quadratic)
    quadratic.push_back({{"u", uv.first}, {"v", uv.second}, {"c", c}});
  return {{"n", h.n},
          {"convention", to_string(h.convention)},
          {"offset", h.offset},
          {"linear", std::move(linear)},
          {"quadratic", std::move(quadratic)}};
}

IsingHamiltonian hamiltonian_from_json(const nlohmann::json& j) {
  try {
    IsingHamiltonian h;
    h.n = j.at("n").get<int>();
    h.convention = parse_convention(j.at("convention").get<std::string>());
    h.offset = j.at("offset").get<double>();
    for (const auto& t : j.at("linear")) {
      int q = t.at("q").get<int>();
      if (q < 0 || q >= h.n) throw ContractError("hamiltonian json: qubit out of range");
      h.linear[q] += t.at("c").get<double>();
    }
    for (const auto& t : j.at("quadratic")) {
      int u = t.at("u").get<int>(), v = t.at("v").get<int>();
      if (u < 0 || v < 0 || u >= h.n || v >= h.n || u == v)
        throw ContractError("hamiltonian json: bad quadratic term");
      h.quadratic[make_edge(u, v)] += t.at("c").get<double>();
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("hamiltonian json: ") + e.what());
  }
}

}  // namespace aaqaoa
