#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "aaqaoa/graph.hpp"

namespace testsupport {

// Uniform-ish random labelled tree: each vertex v > 0 attaches to a random
// earlier vertex, then labels are shuffled.
inline aaqaoa::Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<aaqaoa::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back(aaqaoa::make_edge(label[v], label[parent(rng)]));
  }
  return aaqaoa::Graph(n, edges);
}

// Random graph with edge probability `density`; may be disconnected.
inline aaqaoa::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<aaqaoa::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (keep(rng)) edges.emplace_back(u, v);
  return aaqaoa::Graph(n, edges);
}

inline aaqaoa::Graph relabel(const aaqaoa::Graph& g, const std::vector<int>& perm) {
  std::vector<aaqaoa::Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back(aaqaoa::make_edge(perm[u], perm[v]));
  return aaqaoa::Graph(g.num_vertices(), edges);
}

}  // namespace testsupport
