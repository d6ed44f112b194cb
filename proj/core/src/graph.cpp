#include "triwalk/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json_format.hpp"
#include "text_records.hpp"
#include "triwalk/error.hpp"

namespace triwalk {

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "label count " + std::to_string(labels.size()) +
                    " does not match vertex count " + std::to_string(n));
  }
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kUnknownVertex,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} references a vertex outside [0," +
                      std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopEdge,
                  "loop edge at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }

  Graph g;
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);
  g.neighbors_.assign(n, {});
  for (const auto& e : g.edges_) {
    g.neighbors_[e.u].push_back(e.v);
    g.neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());

  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push(y);
      }
    }
  }
  if (reached != n) {
    auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw Error(ErrorCode::kDisconnected,
                "graph is disconnected: vertex " + std::to_string(missing) +
                    " is unreachable from vertex 0");
  }
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex x) const {
  if (x >= neighbors_.size()) {
    throw Error(ErrorCode::kUnknownVertex,
                "unknown vertex " + std::to_string(x));
  }
  return neighbors_[x];
}

bool Graph::adjacent(Vertex x, Vertex y) const {
  auto nb = neighbors(x);
  return std::binary_search(nb.begin(), nb.end(), y);
}

std::string Graph::label(Vertex x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

ArcSet::ArcSet(const Graph& g) {
  arcs_.reserve(2 * g.num_edges());
  for (const auto& e : g.edges()) {
    arcs_.push_back({e.u, e.v});
    arcs_.push_back({e.v, e.u});
  }
  std::sort(arcs_.begin(), arcs_.end());
  reverse_.resize(arcs_.size());
  in_arcs_.assign(g.num_vertices(), {});
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    reverse_[i] = index(arcs_[i].reversed());
    in_arcs_[arcs_[i].terminus].push_back(i);
  }
}

std::optional<std::size_t> ArcSet::find(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

std::size_t ArcSet::index(Arc a) const {
  if (auto i = find(a)) return *i;
  throw Error(ErrorCode::kUnknownArc, "unknown arc (" +
                                          std::to_string(a.origin) + "," +
                                          std::to_string(a.terminus) + ")");
}

std::span<const std::size_t> ArcSet::in_arcs(Vertex x) const {
  if (x >= in_arcs_.size()) {
    throw Error(ErrorCode::kUnknownVertex,
                "unknown vertex " + std::to_string(x));
  }
  return in_arcs_[x];
}

AdjacencyDegree adjacency_and_degree(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  AdjacencyDegree out{Eigen::MatrixXi::Zero(n, n), Eigen::MatrixXi::Zero(n, n)};
  for (const auto& e : g.edges()) {
    out.A(e.u, e.v) = 1;
    out.A(e.v, e.u) = 1;
  }
  for (Eigen::Index x = 0; x < n; ++x) out.D(x, x) = out.A.row(x).sum();
  return out;
}

Graph gen_complete(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "complete graph needs n >= 2, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "cycle needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_double_cone(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "double cone needs n >= 3, got " + std::to_string(n));
  }
  constexpr Vertex kPlus = 0;
  constexpr Vertex kMinus = 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels{"u+", "u-"};
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex xi = 2 + i;
    const Vertex next = 2 + (i + 1) % n;
    edges.push_back({kPlus, xi});
    edges.push_back({kMinus, xi});
    edges.push_back({xi, next});
    labels.push_back("x" + std::to_string(i));
  }
  return Graph::from_edges(n + 2, std::move(edges), std::move(labels));
}

Graph gen_star(std::size_t leaves) {
  if (leaves < 1) {
    throw Error(ErrorCode::kInvalidArgument, "star needs at least one leaf");
  }
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  detail::for_each_record(text, [&](std::size_t line_no, const auto& tokens) {
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected two vertex indices, got " +
                                         std::to_string(tokens.size()));
    }
    const auto u = detail::parse_index(tokens[0], line_no);
    const auto v = detail::parse_index(tokens[1], line_no);
    n = std::max({n, u + 1, v + 1});
    edges.push_back({u, v});
  });
  if (edges.empty()) throw Error(ErrorCode::kEmptyGraph, "edge list is empty");
  return Graph::from_edges(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.num_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  return detail::dump_json(j);
}

}  // namespace triwalk
