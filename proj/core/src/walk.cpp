#include "triwalk/walk.hpp"

#include <cmath>

#include "json_format.hpp"
#include "triwalk/error.hpp"
#include "triwalk/linalg.hpp"

namespace triwalk {

using Eigen::Index;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

WalkState initial_state(const ArcSet& arcs, const InitialSpec& spec) {
  const auto m = static_cast<Index>(arcs.size());
  WalkState out{Eigen::VectorXcd::Zero(m)};
  std::visit(Overloaded{
                 [&](const start::Uniform&) {
                   out.amplitudes.setConstant(1.0 / std::sqrt(static_cast<double>(m)));
                 },
                 [&](const start::Point& p) {
                   out.amplitudes(static_cast<Index>(arcs.index(p.arc))) = 1.0;
                 },
                 [&](const start::VertexUniform& v) {
                   const auto in = arcs.in_arcs(v.x);
                   const double value = 1.0 / std::sqrt(static_cast<double>(in.size()));
                   for (const std::size_t a : in) out.amplitudes(static_cast<Index>(a)) = value;
                 },
             },
             spec);
  return out;
}

Trajectory evolve(const Eigen::MatrixXcd& U, const WalkState& psi, std::size_t steps,
                  std::size_t stride) {
  if (stride == 0) throw Error(ErrorCode::kInvalidArgument, "stride must be positive");
  if (U.rows() != U.cols() || U.cols() != psi.amplitudes.size()) {
    throw Error(ErrorCode::kInvalidArgument, "evolution and state dimensions differ");
  }
  Trajectory out;
  out.times.push_back(0);
  out.states.push_back(psi);
  Eigen::VectorXcd current = psi.amplitudes;
  for (std::size_t t = 1; t <= steps; ++t) {
    current = U * current;
    if (t % stride == 0 || t == steps) {
      out.times.push_back(t);
      out.states.push_back({current});
    }
  }
  return out;
}

Trajectory evolve(const Eigen::MatrixXd& U, const WalkState& psi, std::size_t steps,
                  std::size_t stride) {
  return evolve(Eigen::MatrixXcd(U.cast<Complex>()), psi, steps, stride);
}

Eigen::VectorXd vertex_distribution(const ArcSet& arcs, const WalkState& psi) {
  if (psi.amplitudes.size() != static_cast<Index>(arcs.size())) {
    throw Error(ErrorCode::kInvalidArgument, "state length differs from the arc count");
  }
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Index>(arcs.num_vertices()));
  for (std::size_t a = 0; a < arcs.size(); ++a)
    p(static_cast<Index>(arcs[a].terminus)) += std::norm(psi.amplitudes(static_cast<Index>(a)));
  return p;
}

std::optional<std::size_t> detect_period(const Eigen::MatrixXd& M, std::size_t max_t, double tol) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::kInvalidArgument, "matrix is not square");
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd power = M;
  for (std::size_t t = 1; t <= max_t; ++t) {
    if (max_abs(power - I) <= tol) return t;
    power = power * M;
  }
  return std::nullopt;
}

std::string trajectory_to_csv(const ArcSet& arcs, const Trajectory& trajectory) {
  std::string out = "t";
  for (std::size_t x = 0; x < arcs.num_vertices(); ++x) out += ",vertex_" + std::to_string(x);
  out += '\n';
  for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
    out += std::to_string(trajectory.times[i]);
    const Eigen::VectorXd p = vertex_distribution(arcs, trajectory.states[i]);
    for (Index x = 0; x < p.size(); ++x) out += ',' + detail::format_double(p(x));
    out += '\n';
  }
  return out;
}

}  // namespace triwalk
