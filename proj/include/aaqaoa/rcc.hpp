#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "aaqaoa/graph.hpp"

namespace aaqaoa {

/// Vertices within graph distance `radius` of any source, ascending.
std::vector<Vertex> distance_ball(const Graph& g, const std::vector<Vertex>& sources, int radius);

/// Reverse causal cone of edge `e` after `p` layers: every vertex within
/// distance p of either endpoint. Throws ContractError if e is not an edge
/// or p < 1.
std::vector<Vertex> rcc_ball(const Graph& g, const Edge& e, int p);

struct RccReport {
  int p = 0;
  std::vector<Vertex> covered;
  std::vector<Vertex> uncovered;
  std::map<Edge, std::vector<Vertex>> per_edge;
};

/// Union of the cones of `reps` at depth p.
RccReport combined_coverage(const Graph& g, const std::vector<Edge>& reps, int p);

/// Smallest p >= 1 whose combined cone covers the graph. Throws ContractError
/// on a disconnected graph or an empty representative list.
int minimal_depth(const Graph& g, const std::vector<Edge>& reps);

nlohmann::json to_json(const RccReport& report);

}  // namespace aaqaoa
