#include "aaqaoa/rcc.hpp"

#include <queue>

#include "aaqaoa/errors.hpp"

namespace aaqaoa {

std::vector<Vertex> distance_ball(const Graph& g, const std::vector<Vertex>& sources, int radius) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<Vertex> frontier;
  for (Vertex s : sources) {
    if (s < 0 || s >= g.num_vertices()) throw ContractError("distance_ball: source out of range");
    if (dist[s] < 0) {
      dist[s] = 0;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    if (dist[v] == radius) continue;
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
  }
  std::vector<Vertex> ball;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (dist[v] >= 0) ball.push_back(v);
  return ball;
}

std::vector<Vertex> rcc_ball(const Graph& g, const Edge& e, int p) {
  if (p < 1) throw ContractError("rcc_ball: depth must be >= 1");
  if (!g.has_edge(e.first, e.second))
    throw ContractError("rcc_ball: (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                        ") is not an edge");
  return distance_ball(g, {e.first, e.second}, p);
}

RccReport combined_coverage(const Graph& g, const std::vector<Edge>& reps, int p) {
  if (reps.empty()) throw ContractError("combined_coverage: no representative edges");
  RccReport report;
  report.p = p;
  std::vector<char> in(g.num_vertices(), 0);
  for (const auto& e : reps) {
    auto ball = rcc_ball(g, e, p);
    for (Vertex v : ball) in[v] = 1;
    report.per_edge[make_edge(e.first, e.second)] = std::move(ball);
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) (in[v] ? report.covered : report.uncovered).push_back(v);
  return report;
}

int minimal_depth(const Graph& g, const std::vector<Edge>& reps) {
  if (reps.empty()) throw ContractError("minimal_depth: no representative edges");
  if (!g.is_connected()) throw ContractError("minimal_depth: graph is disconnected, coverage unreachable");
  for (int p = 1;; ++p)
    if (combined_coverage(g, reps, p).uncovered.empty()) return p;
}

nlohmann::json to_json(const RccReport& report) {
  return {{"p", report.p}, {"covered", report.covered}, {"uncovered", report.uncovered}};
}

}  // namespace aaqaoa
