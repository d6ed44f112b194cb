#pragma once

#include <string>

#include <Eigen/Dense>

#include "triwalk/graph.hpp"
#include "triwalk/permutation.hpp"
#include "triwalk/triangulation.hpp"

namespace triwalk {

/// Every dense operator of the moving-shift walk for one (graph, partition)
/// pair, indexed by the canonical arc order. Arc-space matrices are
/// |A| x |A|; vertex-space matrices are |V| x |V|.
struct OperatorSet {
  ArcSet arcs;
  Eigen::MatrixXi A;
  Eigen::MatrixXi D;
  Eigen::MatrixXd d;   ///< boundary, |V| x |A|
  Eigen::MatrixXd S;   ///< flip-flop shift
  Eigen::MatrixXd Sc;  ///< moving shift
  Eigen::MatrixXd U;   ///< Grover walk S(2d*d - I)
  Eigen::MatrixXd Uc;  ///< moving-shift walk Sc(2d*d - I)
  Eigen::MatrixXd T;   ///< D^{-1/2} A D^{-1/2}
  Eigen::MatrixXd T1;  ///< d Sc d*
  Eigen::MatrixXd T2;  ///< d Sc^2 d*
  Eigen::MatrixXi R;   ///< vertex / triangle incidence, |V| x |pi|
  Permutation S_perm;
  Permutation Sc_perm;
};

/// L = [d* | Sc d* | Sc^2 d*], the 3|V| x 3|V| block matrix Ttilde with
/// U_c L = L Ttilde, its closed-form inverse, and B with
/// B (Ttilde^3 + I) = [[I,T,T],[T,I,T],[T,T,I]].
struct LiftedSystem {
  Eigen::MatrixXd L;
  Eigen::MatrixXd Ttilde;
  Eigen::MatrixXd Ttilde_inverse;
  Eigen::MatrixXd B;
};

Eigen::MatrixXd build_boundary(const Graph& g);
Permutation flipflop_permutation(const ArcSet& arcs);
Eigen::MatrixXd build_flipflop(const ArcSet& arcs);
Eigen::MatrixXd build_moving_shift(const TrianglePartition& pi);

/// 2 d* d - I.
Eigen::MatrixXd grover_coin(const Eigen::MatrixXd& d);

struct Evolutions {
  Eigen::MatrixXd U;
  Eigen::MatrixXd Uc;
};
Evolutions build_evolutions(const Graph& g, const TrianglePartition& pi);

/// Closed form D^{-1/2} A D^{-1/2}.
Eigen::MatrixXd build_T(const Graph& g);

struct DiscriminantPair {
  Eigen::MatrixXd T1;
  Eigen::MatrixXd T2;
};
DiscriminantPair build_T1_T2(const Graph& g, const TrianglePartition& pi);

LiftedSystem build_lifted(const Graph& g, const TrianglePartition& pi);
LiftedSystem build_lifted(const OperatorSet& ops);

OperatorSet build_operators(const Graph& g, const TrianglePartition& pi);

/// [[I,T,T],[T,I,T],[T,T,I]].
Eigen::MatrixXd block_identity_T(const Eigen::MatrixXd& T);

/// Row-major CSV, 17 significant digits.
std::string matrix_to_csv(const Eigen::MatrixXd& m);
/// `{"rows": r, "cols": c, "data": [[...], ...]}`
std::string matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace triwalk
