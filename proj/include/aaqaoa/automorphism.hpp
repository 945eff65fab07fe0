#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "aaqaoa/graph.hpp"

namespace aaqaoa {

/// Bijection on 0..n-1; image(v) is where v goes.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ContractError unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  Edge operator()(const Edge& e) const { return make_edge(images_[e.first], images_[e.second]); }
  const std::vector<Vertex>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// (outer ∘ inner)(v) = outer(inner(v)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// True iff `p` maps the edge set of `g` onto itself.
bool is_automorphism(const Graph& g, const Permutation& p);

struct GeneratorSet {
  int n = 0;
  /// Empty means the trivial group.
  std::vector<Permutation> generators;
};

/// Ordered list of disjoint, non-empty cells covering 0..n-1.
struct OrderedPartition {
  std::vector<std::vector<Vertex>> cells;

  bool is_discrete() const;
  /// Throws ContractError if the cells are not a partition of 0..n-1.
  void validate(int n) const;
  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

OrderedPartition unit_partition(int n);

/// Coarsest equitable refinement of `p` (colour refinement).
///
/// Each round splits every cell by the multiset of neighbour counts into the
/// current cells. Fragments are ordered by descending count signature and keep
/// ascending labels, so the result depends on the graph structure only, never
/// on vertex names. The output refines `p` and refining it again is a no-op.
OrderedPartition refine_partition(const Graph& g, const OrderedPartition& p);

struct SearchLimits {
  int vertex_cap = 256;
  long long node_budget = 50'000'000;
};

/// Generators of Aut(g) via individualization-refinement backtracking.
///
/// The first leaf of the search tree is fixed; walking its path bottom-up,
/// every vertex of the level's target cell that is not yet known to share
/// an orbit with the base point gets its subtree searched for a leaf
/// equivalent to the first one. The generators found at each level generate
/// the pointwise stabiliser of the earlier base points, so the union
/// generates the full group.
GeneratorSet find_automorphism_generators(const Graph& g, const SearchLimits& limits = {});

/// Every automorphism of g (identity included) by enumerating all n! bijections.
/// Oracle only: throws ResourceError for n > 10.
std::vector<Permutation> brute_force_automorphisms(const Graph& g);

/// All group elements generated by `gens`. Throws ResourceError past `limit`.
std::vector<Permutation> enumerate_group(const GeneratorSet& gens, std::size_t limit = 1'000'000);

struct EdgeClass {
  int id = 0;
  std::vector<Edge> edges;  // sorted
  Edge representative;      // lexicographic minimum of `edges`

  int size() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Orbits of the edge set, ordered by representative.
struct EdgeClassPartition {
  std::vector<EdgeClass> classes;
  /// Indexed like Graph::edges().
  std::vector<int> class_of;

  int num_classes() const { return static_cast<int>(classes.size()); }
  std::vector<int> sizes() const;
  std::vector<Edge> representatives() const;
  friend bool operator==(const EdgeClassPartition&, const EdgeClassPartition&) = default;
};

/// Edge orbits under the group generated by `gens` (union-find over the
/// Schreier graph, so orbits are closed under composition).
EdgeClassPartition edge_equivalence_classes(const Graph& g, const GeneratorSet& gens);

/// Convenience overload running the generator search first.
EdgeClassPartition edge_equivalence_classes(const Graph& g);

/// Vertex orbits; cells ordered by their smallest vertex.
OrderedPartition vertex_orbits(const Graph& g, const GeneratorSet& gens);

/// A group element (as a product of generators) mapping edge `from` to `to`,
/// or nullopt when the edges lie in different orbits.
std::optional<Permutation> edge_orbit_witness(const Graph& g, const GeneratorSet& gens,
                                              const Edge& from, const Edge& to);

nlohmann::json to_json(const EdgeClassPartition& classes);

}  // namespace aaqaoa
