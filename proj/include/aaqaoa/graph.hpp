#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aaqaoa {

using Vertex = int;

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Generators refuse to build graphs larger than this unless told otherwise.
inline constexpr int kDefaultVertexCap = 64;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized (u < v), deduplicated and sorted lexicographically;
/// adjacency lists are sorted. Construction throws ContractError on
/// self-loops or out-of-range labels.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const;
  bool is_connected() const;

  /// Subgraph induced on `vertices` (sorted, unique), relabelled 0..k-1 in
  /// ascending order of the original labels.
  Graph induced_subgraph(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Edge make_edge(Vertex u, Vertex v);

/// Tree where vertex i has children r*i+1 .. r*i+r (those below n).
Graph full_rary_tree(int r, int n, int vertex_cap = kDefaultVertexCap);

/// Perfect r-ary tree of height h, breadth-first labels.
Graph balanced_tree(int r, int h, int vertex_cap = kDefaultVertexCap);

/// Hub 0 joined to 1..n-1.
Graph star_graph(int n, int vertex_cap = kDefaultVertexCap);

Graph path_graph(int n, int vertex_cap = kDefaultVertexCap);

Graph cycle_graph(int n, int vertex_cap = kDefaultVertexCap);

/// Reads the "n m" header + "u v" lines format. '#' lines are comments.
Graph parse_edge_list(std::string_view text);

std::string serialize_edge_list(const Graph& g);

/// Short label such as "(15,14)".
std::string graph_label(const Graph& g);

}  // namespace aaqaoa
