#include "aaqaoa/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "aaqaoa/errors.hpp"
#include "aaqaoa/union_find.hpp"

namespace aaqaoa {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v < 0 || v >= size() || hit[v])
      throw ContractError("permutation: images are not a bijection on 0.." +
                          std::to_string(size() - 1));
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw ContractError("compose: permutation sizes differ");
  std::vector<Vertex> images(inner.size());
  for (int v = 0; v < inner.size(); ++v) images[v] = outer(inner(v));
  return Permutation(std::move(images));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) return false;
  // A bijection sending every edge to an edge permutes the (finite) edge set.
  for (const auto& [u, v] : g.edges())
    if (!g.has_edge(p(u), p(v))) return false;
  return true;
}

bool OrderedPartition::is_discrete() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

void OrderedPartition::validate(int n) const {
  std::vector<char> hit(n, 0);
  int covered = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) throw ContractError("partition: empty cell");
    for (Vertex v : cell) {
      if (v < 0 || v >= n || hit[v]) throw ContractError("partition: cells overlap or out of range");
      hit[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw ContractError("partition: cells do not cover every vertex");
}

OrderedPartition unit_partition(int n) {
  OrderedPartition p;
  if (n > 0) {
    p.cells.emplace_back(n);
    std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
  }
  return p;
}

namespace {

// Sparse (cell, count) list, sorted by cell index.
using Signature = std::vector<std::pair<int, int>>;

Signature signature_of(const Graph& g, Vertex v, const std::vector<int>& cell_of) {
  std::vector<int> hits;
  hits.reserve(g.degree(v));
  for (Vertex w : g.neighbors(v)) hits.push_back(cell_of[w]);
  std::sort(hits.begin(), hits.end());
  Signature sig;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    sig.emplace_back(hits[i], static_cast<int>(j - i));
    i = j;
  }
  return sig;
}

std::vector<int> cell_index(int n, const OrderedPartition& p) {
  std::vector<int> cell_of(n, -1);
  for (std::size_t c = 0; c < p.cells.size(); ++c)
    for (Vertex v : p.cells[c]) cell_of[v] = static_cast<int>(c);
  return cell_of;
}

// Quotient-matrix fingerprint of an equitable partition: cell sizes and the
// neighbour-count signature of each cell. Equal for nodes related by an
// automorphism.
std::vector<int> node_invariant(const Graph& g, const OrderedPartition& p) {
  auto cell_of = cell_index(g.num_vertices(), p);
  std::vector<int> inv;
  for (const auto& cell : p.cells) {
    inv.push_back(static_cast<int>(cell.size()));
    for (const auto& [c, k] : signature_of(g, cell.front(), cell_of)) {
      inv.push_back(c);
      inv.push_back(k);
    }
    inv.push_back(-1);
  }
  return inv;
}

int target_cell(const OrderedPartition& p) {
  int best = -1;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    auto sz = p.cells[c].size();
    if (sz > 1 && (best < 0 || sz < p.cells[best].size())) best = static_cast<int>(c);
  }
  return best;
}

OrderedPartition individualize(const OrderedPartition& p, int cell, Vertex v) {
  OrderedPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    if (c != cell) {
      out.cells.push_back(p.cells[c]);
      continue;
    }
    out.cells.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex w : p.cells[c])
      if (w != v) rest.push_back(w);
    out.cells.push_back(std::move(rest));
  }
  return out;
}

class GeneratorSearch {
 public:
  GeneratorSearch(const Graph& g, const SearchLimits& limits) : g_(g), limits_(limits) {}

  GeneratorSet run() {
    const int n = g_.num_vertices();
    GeneratorSet result{n, {}};
    if (n <= 1) return result;

    // First path: always individualize the first vertex of the target cell.
    path_.push_back(refine_partition(g_, unit_partition(n)));
    invariants_.push_back(node_invariant(g_, path_.back()));
    while (!path_.back().is_discrete()) {
      int c = target_cell(path_.back());
      targets_.push_back(c);
      path_.push_back(refine_partition(g_, individualize(path_.back(), c, path_.back().cells[c].front())));
      invariants_.push_back(node_invariant(g_, path_.back()));
    }
    for (const auto& cell : path_.back().cells) first_leaf_.push_back(cell.front());

    UnionFind orbits(n);
    for (int level = static_cast<int>(targets_.size()) - 1; level >= 0; --level) {
      const auto& parent = path_[level];
      const int c = targets_[level];
      const Vertex base = parent.cells[c].front();
      for (Vertex w : parent.cells[c]) {
        if (orbits.same(w, base)) continue;
        auto child = refine_partition(g_, individualize(parent, c, w));
        if (auto gamma = search(child, level + 1)) {
          for (Vertex v = 0; v < n; ++v) orbits.unite(v, (*gamma)(v));
          result.generators.push_back(std::move(*gamma));
        }
      }
    }
    return result;
  }

 private:
  std::optional<Permutation> search(const OrderedPartition& node, std::size_t depth) {
    if (++nodes_ > limits_.node_budget)
      throw ResourceError("automorphism search exceeded its node budget of " +
                          std::to_string(limits_.node_budget));
    if (depth >= invariants_.size() || node_invariant(g_, node) != invariants_[depth])
      return std::nullopt;
    if (node.is_discrete()) {
      std::vector<Vertex> images(g_.num_vertices());
      for (std::size_t i = 0; i < first_leaf_.size(); ++i) images[first_leaf_[i]] = node.cells[i].front();
      Permutation gamma(std::move(images));
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    int c = target_cell(node);
    for (Vertex u : node.cells[c])
      if (auto found = search(refine_partition(g_, individualize(node, c, u)), depth + 1)) return found;
    return std::nullopt;
  }

  const Graph& g_;
  SearchLimits limits_;
  std::vector<OrderedPartition> path_;
  std::vector<std::vector<int>> invariants_;
  std::vector<int> targets_;
  std::vector<Vertex> first_leaf_;
  long long nodes_ = 0;
};

int edge_index(const Graph& g, const Edge& e) {
  const auto& edges = g.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

void check_generators(const Graph& g, const GeneratorSet& gens) {
  if (gens.n != g.num_vertices())
    throw ContractError("generator set is on " + std::to_string(gens.n) + " points, graph has " +
                        std::to_string(g.num_vertices()) + " vertices");
  for (std::size_t i = 0; i < gens.generators.size(); ++i)
    if (!is_automorphism(g, gens.generators[i]))
      throw ContractError("generator " + std::to_string(i) + " does not preserve the edge set");
}

}  // namespace

OrderedPartition refine_partition(const Graph& g, const OrderedPartition& p) {
  const int n = g.num_vertices();
  p.validate(n);
  OrderedPartition current = p;
  while (true) {
    auto cell_of = cell_index(n, current);
    OrderedPartition next;
    next.cells.reserve(current.cells.size());
    bool split = false;
    for (const auto& cell : current.cells) {
      if (cell.size() == 1) {
        next.cells.push_back(cell);
        continue;
      }
      std::vector<std::pair<Signature, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) keyed.emplace_back(signature_of(g, v, cell_of), v);
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
      });
      std::size_t start = next.cells.size();
      next.cells.push_back({keyed[0].second});
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) next.cells.emplace_back();
        next.cells.back().push_back(keyed[i].second);
      }
      if (next.cells.size() - start > 1) split = true;
    }
    current = std::move(next);
    if (!split) return current;
  }
}

GeneratorSet find_automorphism_generators(const Graph& g, const SearchLimits& limits) {
  if (g.num_vertices() > limits.vertex_cap)
    throw ResourceError("automorphism search: " + std::to_string(g.num_vertices()) +
                        " vertices exceeds the cap of " + std::to_string(limits.vertex_cap));
  return GeneratorSearch(g, limits).run();
}

std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 10)
    throw ResourceError("brute-force automorphisms: n = " + std::to_string(n) +
                        " exceeds the oracle limit of 10");
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (!g.has_edge(images[u], images[v])) {
        ok = false;
        break;
      }
    if (ok) result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<Permutation> enumerate_group(const GeneratorSet& gens, std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(gens.n)};
  std::deque<Permutation> queue{Permutation::identity(gens.n)};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens.generators) {
      Permutation y = compose(s, x);
      if (seen.insert(y).second) {
        if (seen.size() > limit)
          throw ResourceError("group enumeration exceeded " + std::to_string(limit) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> EdgeClassPartition::sizes() const {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(c.size());
  return out;
}

std::vector<Edge> EdgeClassPartition::representatives() const {
  std::vector<Edge> out;
  for (const auto& c : classes) out.push_back(c.representative);
  return out;
}

EdgeClassPartition edge_equivalence_classes(const Graph& g, const GeneratorSet& gens) {
  check_generators(g, gens);
  const auto& edges = g.edges();
  const int m = g.num_edges();
  UnionFind uf(m);
  // Joining every edge to each generator image builds the Schreier graph;
  // its components are the orbits of the generated group.
  for (int i = 0; i < m; ++i)
    for (const auto& s : gens.generators) uf.unite(i, edge_index(g, s(edges[i])));

  EdgeClassPartition out;
  out.class_of.assign(m, -1);
  std::map<int, int> class_of_root;
  for (int i = 0; i < m; ++i) {
    auto [it, inserted] = class_of_root.try_emplace(uf.find(i), out.num_classes());
    if (inserted) out.classes.push_back(EdgeClass{it->second, {}, edges[i]});
    out.classes[it->second].edges.push_back(edges[i]);
    out.class_of[i] = it->second;
  }
  return out;
}

EdgeClassPartition edge_equivalence_classes(const Graph& g) {
  return edge_equivalence_classes(g, find_automorphism_generators(g));
}

OrderedPartition vertex_orbits(const Graph& g, const GeneratorSet& gens) {
  check_generators(g, gens);
  const int n = g.num_vertices();
  UnionFind uf(n);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& s : gens.generators) uf.unite(v, s(v));
  OrderedPartition out;
  std::map<int, int> cell_of_root;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = cell_of_root.try_emplace(uf.find(v), static_cast<int>(out.cells.size()));
    if (inserted) out.cells.emplace_back();
    out.cells[it->second].push_back(v);
  }
  return out;
}

std::optional<Permutation> edge_orbit_witness(const Graph& g, const GeneratorSet& gens,
                                              const Edge& from, const Edge& to) {
  check_generators(g, gens);
  if (edge_index(g, from) < 0 || edge_index(g, to) < 0)
    throw ContractError("edge_orbit_witness: edge not in graph");
  std::map<Edge, Permutation> reached{{from, Permutation::identity(g.num_vertices())}};
  std::deque<Edge> queue{from};
  while (!queue.empty()) {
    Edge x = queue.front();
    queue.pop_front();
    if (x == to) return reached.at(x);
    const Permutation sigma = reached.at(x);
    for (const auto& s : gens.generators) {
      Edge y = s(x);
      if (!reached.count(y)) {
        reached.emplace(y, compose(s, sigma));
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const EdgeClassPartition& classes) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : classes.classes) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : c.edges) edges.push_back({u, v});
    list.push_back({{"id", c.id},
                    {"size", c.size()},
                    {"representative", {c.representative.first, c.representative.second}},
                    {"edges", std::move(edges)}});
  }
  return {{"classes", std::move(list)}};
}

}  // namespace aaqaoa
