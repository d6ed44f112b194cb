#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace triwalk {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

struct Arc {
  Vertex origin = 0;
  Vertex terminus = 0;

  Arc reversed() const { return {terminus, origin}; }
  auto operator<=>(const Arc&) const = default;
};

/// Finite, simple, connected, undirected graph with dense vertex indices
/// [0, n). Immutable once built; all factories validate.
class Graph {
 public:
  /// Throws Error with kLoopEdge, kDuplicateEdge, kUnknownVertex,
  /// kDisconnected or kEmptyGraph.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return neighbors_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  bool adjacent(Vertex x, Vertex y) const;

  /// Cosmetic; empty when the graph was built without labels.
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex x) const;

 private:
  Graph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::string> labels_;
};

/// The symmetric arc set in canonical (origin, terminus) lexicographic order.
class ArcSet {
 public:
  explicit ArcSet(const Graph& g);

  std::size_t size() const { return arcs_.size(); }
  std::size_t num_vertices() const { return in_arcs_.size(); }
  const Arc& operator[](std::size_t i) const { return arcs_[i]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::optional<std::size_t> find(Arc a) const;
  /// Throws kUnknownArc.
  std::size_t index(Arc a) const;
  std::size_t reverse(std::size_t i) const { return reverse_[i]; }

  /// Arcs terminating at x, in canonical order.
  std::span<const std::size_t> in_arcs(Vertex x) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::size_t> reverse_;
  std::vector<std::vector<std::size_t>> in_arcs_;
};

inline ArcSet arcs(const Graph& g) { return ArcSet(g); }

struct AdjacencyDegree {
  Eigen::MatrixXi A;
  Eigen::MatrixXi D;
};

AdjacencyDegree adjacency_and_degree(const Graph& g);

// Generators.
Graph gen_complete(std::size_t n);
Graph gen_cycle(std::size_t n);
/// Vertices ordered (u+, u-, x_0, ..., x_{n-1}).
Graph gen_double_cone(std::size_t n);
/// Star K_{1,leaves}; the centre is vertex 0.
Graph gen_star(std::size_t leaves);

/// Whitespace-separated index pairs, one edge per line, `#` comments,
/// LF or CRLF line endings.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);
/// `{"n": int, "edges": [[u,v],...]}`
std::string graph_to_json(const Graph& g);

}  // namespace triwalk
