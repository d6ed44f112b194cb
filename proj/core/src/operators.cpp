#include "triwalk/operators.hpp"

#include <cmath>
#include <sstream>

#include "json_format.hpp"
#include "triwalk/error.hpp"

namespace triwalk {

using Eigen::Index;
using Eigen::MatrixXd;

namespace {

Index idx(std::size_t i) { return static_cast<Index>(i); }

void require_same_graph(const Graph& g, const TrianglePartition& pi) {
  const ArcSet arcs(g);
  if (arcs.arcs() != pi.arc_set().arcs()) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition was built for a different graph");
  }
}

}  // namespace

MatrixXd build_boundary(const Graph& g) {
  const ArcSet arcs(g);
  MatrixXd d = MatrixXd::Zero(idx(g.num_vertices()), idx(arcs.size()));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Vertex v = arcs[a].terminus;
    d(idx(v), idx(a)) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  return d;
}

Permutation flipflop_permutation(const ArcSet& arcs) {
  std::vector<std::size_t> images(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) images[a] = arcs.reverse(a);
  return Permutation(std::move(images));
}

MatrixXd build_flipflop(const ArcSet& arcs) { return flipflop_permutation(arcs).matrix(); }

MatrixXd build_moving_shift(const TrianglePartition& pi) { return pi.tau().matrix(); }

MatrixXd grover_coin(const MatrixXd& d) {
  return 2.0 * d.transpose() * d - MatrixXd::Identity(d.cols(), d.cols());
}

Evolutions build_evolutions(const Graph& g, const TrianglePartition& pi) {
  require_same_graph(g, pi);
  const MatrixXd coin = grover_coin(build_boundary(g));
  return {build_flipflop(pi.arc_set()) * coin, build_moving_shift(pi) * coin};
}

MatrixXd build_T(const Graph& g) {
  const auto n = idx(g.num_vertices());
  MatrixXd T = MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u) * g.degree(e.v)));
    T(idx(e.u), idx(e.v)) = w;
    T(idx(e.v), idx(e.u)) = w;
  }
  return T;
}

DiscriminantPair build_T1_T2(const Graph& g, const TrianglePartition& pi) {
  require_same_graph(g, pi);
  const MatrixXd d = build_boundary(g);
  const MatrixXd Sc = build_moving_shift(pi);
  return {d * Sc * d.transpose(), d * Sc * Sc * d.transpose()};
}

MatrixXd block_identity_T(const MatrixXd& T) {
  const Index n = T.rows();
  MatrixXd out(3 * n, 3 * n);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      out.block(i * n, j * n, n, n) = (i == j) ? MatrixXd::Identity(n, n) : T;
  return out;
}

LiftedSystem build_lifted(const OperatorSet& ops) {
  const Index n = ops.T.rows();
  const MatrixXd I = MatrixXd::Identity(n, n);
  const MatrixXd Z = MatrixXd::Zero(n, n);
  const MatrixXd dstar = ops.d.transpose();

  LiftedSystem out;
  out.L.resize(dstar.rows(), 3 * n);
  out.L << dstar, ops.Sc * dstar, ops.Sc * ops.Sc * dstar;

  out.Ttilde.resize(3 * n, 3 * n);
  out.Ttilde << Z, Z, -I,
                I, 2 * ops.T, 2 * ops.T,
                Z, -I, Z;

  out.Ttilde_inverse.resize(3 * n, 3 * n);
  out.Ttilde_inverse << 2 * ops.T, I, 2 * ops.T,
                        Z, Z, -I,
                        -I, Z, Z;

  out.B.resize(3 * n, 3 * n);
  out.B << 0.5 * I, Z, Z,
           ops.T, 0.5 * I, ops.T,
           ops.T, Z, 0.5 * I;
  return out;
}

LiftedSystem build_lifted(const Graph& g, const TrianglePartition& pi) {
  return build_lifted(build_operators(g, pi));
}

OperatorSet build_operators(const Graph& g, const TrianglePartition& pi) {
  require_same_graph(g, pi);
  auto [A, D] = adjacency_and_degree(g);
  OperatorSet ops{pi.arc_set(), std::move(A), std::move(D)};
  ops.d = build_boundary(g);
  ops.S_perm = flipflop_permutation(ops.arcs);
  ops.Sc_perm = pi.tau();
  ops.S = ops.S_perm.matrix();
  ops.Sc = ops.Sc_perm.matrix();
  const MatrixXd coin = grover_coin(ops.d);
  ops.U = ops.S * coin;
  ops.Uc = ops.Sc * coin;
  ops.T = build_T(g);
  ops.T1 = ops.d * ops.Sc * ops.d.transpose();
  ops.T2 = ops.d * ops.Sc * ops.Sc * ops.d.transpose();
  ops.R = build_R(pi);
  return ops;
}

std::string matrix_to_csv(const MatrixXd& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += detail::format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const MatrixXd& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto data = nlohmann::ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return detail::dump_json(j);
}

}  // namespace triwalk
