#include "aaqaoa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "aaqaoa/errors.hpp"

namespace aaqaoa {

Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ContractError("graph: negative vertex count");
  for (auto& e : edges) {
    if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
      throw ContractError("graph: edge (" + std::to_string(e.first) + "," +
                          std::to_string(e.second) + ") has a label outside 0.." +
                          std::to_string(n - 1));
    if (e.first == e.second)
      throw ContractError("graph: self-loop at vertex " + std::to_string(e.first));
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n_;
}

Graph Graph::induced_subgraph(const std::vector<Vertex>& vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) sub.emplace_back(index[u], index[v]);
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

namespace {

void check_cap(long long n, int cap, const char* what) {
  if (n > cap)
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceeds the cap of " + std::to_string(cap));
}

}  // namespace

Graph full_rary_tree(int r, int n, int vertex_cap) {
  if (r < 2) throw ContractError("full_rary_tree: branching factor must be >= 2");
  if (n < 1) throw ContractError("full_rary_tree: vertex count must be >= 1");
  check_cap(n, vertex_cap, "full_rary_tree");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= r; ++k) {
      long long child = static_cast<long long>(r) * i + k;
      if (child >= n) break;
      edges.emplace_back(i, static_cast<int>(child));
    }
  return Graph(n, std::move(edges));
}

Graph balanced_tree(int r, int h, int vertex_cap) {
  if (r < 2) throw ContractError("balanced_tree: branching factor must be >= 2");
  if (h < 1) throw ContractError("balanced_tree: height must be >= 1");
  long long n = 1, level = 1;
  for (int d = 1; d <= h; ++d) {
    level *= r;
    n += level;
    check_cap(n, vertex_cap, "balanced_tree");
  }
  return full_rary_tree(r, static_cast<int>(n), vertex_cap);
}

Graph star_graph(int n, int vertex_cap) {
  if (n < 2) throw ContractError("star_graph: vertex count must be >= 2");
  check_cap(n, vertex_cap, "star_graph");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n, int vertex_cap) {
  if (n < 1) throw ContractError("path_graph: vertex count must be >= 1");
  check_cap(n, vertex_cap, "path_graph");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n, int vertex_cap) {
  if (n < 3) throw ContractError("cycle_graph: vertex count must be >= 3");
  check_cap(n, vertex_cap, "cycle_graph");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

namespace {

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw ParseError(line_no, "expected integers, got \"" + std::string(line) + "\"");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  bool have_header = false;
  long long n = 0, m = 0;
  long long seen_edges = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto values = parse_ints(line, line_no);
    if (values.empty()) continue;
    if (values.size() != 2) throw ParseError(line_no, "expected exactly two integers");
    if (!have_header) {
      n = values[0];
      m = values[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      have_header = true;
      continue;
    }
    long long u = values[0], v = values[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex label out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (++seen_edges > m) throw ParseError(line_no, "more edge lines than the header declares");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(line_no, 1), "missing \"n m\" header");
  if (seen_edges != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen_edges));
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_label(const Graph& g) {
  return "(" + std::to_string(g.num_vertices()) + "," + std::to_string(g.num_edges()) + ")";
}

}  // namespace aaqaoa
