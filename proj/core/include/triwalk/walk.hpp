#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/graph.hpp"

namespace triwalk {

struct WalkState {
  Eigen::VectorXcd amplitudes;  ///< indexed by arc

  double norm() const { return amplitudes.norm(); }
};

namespace start {
struct Uniform {};
struct Point {
  Arc arc;
};
struct VertexUniform {
  Vertex x;
};
}  // namespace start

using InitialSpec = std::variant<start::Uniform, start::Point, start::VertexUniform>;

/// Normalized initial state. Throws kUnknownArc / kUnknownVertex.
WalkState initial_state(const ArcSet& arcs, const InitialSpec& spec);

struct Trajectory {
  std::vector<std::size_t> times;
  std::vector<WalkState> states;
};

/// Psi_{t+1} = U Psi_t for t < steps. Records t = 0 and every stride-th
/// step after it, plus the final step.
Trajectory evolve(const Eigen::MatrixXcd& U, const WalkState& psi, std::size_t steps,
                  std::size_t stride = 1);
Trajectory evolve(const Eigen::MatrixXd& U, const WalkState& psi, std::size_t steps,
                  std::size_t stride = 1);

/// p(x) = sum over arcs a into x of |Psi_a|^2.
Eigen::VectorXd vertex_distribution(const ArcSet& arcs, const WalkState& psi);

/// Smallest t in [1, max_t] with max|M^t - I| <= tol.
std::optional<std::size_t> detect_period(const Eigen::MatrixXd& M, std::size_t max_t,
                                         double tol = 1e-9);

/// `t,vertex_0,...,vertex_{n-1}` followed by one row per recorded step.
std::string trajectory_to_csv(const ArcSet& arcs, const Trajectory& trajectory);

}  // namespace triwalk
