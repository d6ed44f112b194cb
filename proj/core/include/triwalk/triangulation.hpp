#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/graph.hpp"
#include "triwalk/permutation.hpp"

namespace triwalk {

/// Three arcs (a1, a2, a3). A well-formed triangle is head-to-tail
/// (t(a1) = o(a2), t(a2) = o(a3), t(a3) = o(a1)) on three distinct vertices;
/// malformed ones can still be represented so that validation can report
/// on them.
struct DirectedTriangle {
  std::array<Arc, 3> arcs;

  /// The triangle u -> v -> w -> u.
  static DirectedTriangle through(Vertex u, Vertex v, Vertex w) {
    return {{Arc{u, v}, Arc{v, w}, Arc{w, u}}};
  }

  std::array<Vertex, 3> vertices() const {
    return {arcs[0].origin, arcs[1].origin, arcs[2].origin};
  }
  bool is_cycle() const {
    return arcs[0].terminus == arcs[1].origin &&
           arcs[1].terminus == arcs[2].origin &&
           arcs[2].terminus == arcs[0].origin;
  }
  bool has_distinct_vertices() const {
    auto v = vertices();
    return v[0] != v[1] && v[1] != v[2] && v[0] != v[2];
  }
  /// Rotation starting at the smallest vertex.
  DirectedTriangle canonical() const;

  auto operator<=>(const DirectedTriangle&) const = default;
};

struct Violation {
  enum class Kind {
    kUnknownArc,
    kBrokenCycle,
    kRepeatedVertex,
    kOverlap,
    kUncovered,
  };
  Kind kind;
  /// Offending triangle index, when the violation belongs to one.
  std::optional<std::size_t> triangle;
  std::optional<Arc> arc;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Partition pi of the arc set into directed triangles, with the next-arc
/// map tau. Only obtainable through validated construction.
class TrianglePartition {
 public:
  /// Throws Error(kInvalidPartition) carrying the validation summary.
  static TrianglePartition from_triangles(const Graph& g,
                                          std::vector<DirectedTriangle> triangles);

  const std::vector<DirectedTriangle>& triangles() const { return triangles_; }
  std::size_t size() const { return triangles_.size(); }
  std::size_t num_vertices() const { return arcs_.num_vertices(); }
  const ArcSet& arc_set() const { return arcs_; }

  /// tau as a permutation of arc indices.
  const Permutation& tau() const { return tau_; }
  std::size_t next_arc(std::size_t arc) const { return tau_(arc); }
  std::size_t triangle_of(std::size_t arc) const { return arc_to_triangle_[arc]; }
  /// Arc indices of triangle c, in cycle order.
  const std::array<std::size_t, 3>& triangle_arcs(std::size_t c) const {
    return triangle_arcs_[c];
  }

 private:
  TrianglePartition(ArcSet arcs) : arcs_(std::move(arcs)) {}

  ArcSet arcs_;
  std::vector<DirectedTriangle> triangles_;
  std::vector<std::array<std::size_t, 3>> triangle_arcs_;
  std::vector<std::size_t> arc_to_triangle_;
  Permutation tau_;
};

/// Both cyclic orientations of every 3-clique, canonical and sorted.
std::vector<DirectedTriangle> enumerate_directed_triangles(const Graph& g);

struct NotTriangulable {
  enum class Reason {
    kNoDirectedTriangles,
    kArcCountNotDivisible,
    kArcInNoTriangle,
    kSearchExhausted,
  };
  Reason reason;
  std::optional<Arc> witness;

  std::string message() const;
};

using PartitionResult = std::variant<TrianglePartition, NotTriangulable>;

/// Exact-cover backtracking, branching on the uncovered arc with the fewest
/// admissible triangles. `limit` caps node expansions; exceeding it throws
/// Error(kSearchBudgetExceeded).
PartitionResult find_partition(const Graph& g,
                               std::optional<std::uint64_t> limit = std::nullopt);

/// The double-cone partition: for each i, (u+, x_i, x_{i+1}) and
/// (u-, x_{i+1}, x_i). Built against gen_double_cone(n).
TrianglePartition canonical_double_cone_partition(std::size_t n);

ValidationReport validate_partition(const Graph& g,
                                    std::span<const DirectedTriangle> triangles);

/// pi(x), ordered to match in_arcs(x): element i owns the i-th arc into x.
std::vector<DirectedTriangle> triangles_at(const TrianglePartition& pi, Vertex x);

/// R(x, C) = 1 iff C in pi(x).
Eigen::MatrixXi build_R(const TrianglePartition& pi);

/// One triangle per line, "u v w" meaning (u,v),(v,w),(w,u); `#` comments.
std::vector<DirectedTriangle> parse_partition(std::string_view text);
std::string format_partition(std::span<const DirectedTriangle> triangles);
/// `{"triangles": [[u,v,w],...]}`
std::string partition_to_json(std::span<const DirectedTriangle> triangles);

}  // namespace triwalk
