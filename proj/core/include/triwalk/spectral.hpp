#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/graph.hpp"
#include "triwalk/linalg.hpp"
#include "triwalk/operators.hpp"
#include "triwalk/triangulation.hpp"

namespace triwalk {

/// omega = e^{2 pi i / 3}.
inline const Complex kOmega{-0.5, std::numbers::sqrt3 / 2.0};

/// omega^k for k in {0, 1, 2} (any integer accepted, reduced mod 3).
Complex omega_power(int k);

struct Tolerances {
  double cluster = 1e-7;   ///< eigenvalues closer than this are one cluster
  double pairing = 1e-9;   ///< max distance between matched clusters
  double residual = 1e-9;  ///< eigenpair residual bound
  double rank = kDefaultRankTol;
  double eigenvalue = 1e-8;  ///< classification of sigma(T) at 1, -1/2, -1
};

struct EigenvalueCluster {
  Complex value;
  std::size_t multiplicity = 0;
};

/// Union-find closure of |a - b| <= tol; clusters are represented by their
/// mean and sorted by (Re, Im).
std::vector<EigenvalueCluster> cluster_eigenvalues(std::span<const Complex> values, double tol);

struct MultisetMatch {
  bool matched = false;
  double max_pairing_error = 0.0;
};

/// Greedy nearest pairing of predicted clusters against computed ones.
MultisetMatch match_multisets(std::span<const EigenvalueCluster> computed,
                              std::span<const EigenvalueCluster> predicted, double tol);

/// sigma(U_c) from sigma(T): e^{+-i arccos(lambda - 1/2)} for lambda != 1
/// (lambda = -1/2 contributes a single -1), {1}^|V|, and the birth
/// eigenvalues -1, -omega, -omega^2 with their multiplicities. `b` must equal
/// the multiplicity of -1/2 in sigma_T.
std::vector<Complex> predict_spectrum_new(std::span<const double> sigma_T, std::size_t num_vertices,
                                          std::size_t num_edges, std::size_t b,
                                          double tol = 1e-8);

/// sigma(U) of the Grover walk: e^{+-i arccos(lambda)}, with lambda = +-1
/// contributing once, plus {1}^{|E|-|V|+1} and {-1}^{|E|-|V|+dim ker(T+1)}.
std::vector<Complex> predict_spectrum_conventional(std::span<const double> sigma_T,
                                                   std::size_t num_vertices,
                                                   std::size_t num_edges, double tol = 1e-8);

struct SpectrumReport {
  std::string walk;  ///< "moving-shift" or "grover"
  std::vector<EigenvalueCluster> computed;
  std::vector<EigenvalueCluster> predicted;
  bool matched = false;
  double max_pairing_error = 0.0;
  double residual_max = 0.0;
  std::size_t total_computed = 0;
  std::size_t total_predicted = 0;
  /// dim ker(T + 1/2) for the moving-shift walk, dim ker(T + 1) for Grover.
  std::size_t kernel_dim = 0;
};

SpectrumReport verify_mapping(const Graph& g, const TrianglePartition& pi,
                              const Tolerances& tol = {});
/// Validates the raw triangles first; throws kInvalidPartition.
SpectrumReport verify_mapping(const Graph& g, std::span<const DirectedTriangle> triangles,
                              const Tolerances& tol = {});
SpectrumReport verify_conventional(const Graph& g, const Tolerances& tol = {});

std::string report_to_json(const SpectrumReport& report);

enum class EigenKind { kInherited, kBirth };

struct EigenSpace {
  Complex eigenvalue;
  Eigen::MatrixXcd basis;  ///< one column per vector, arc-indexed
  EigenKind kind = EigenKind::kInherited;

  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }
};

/// Eigenvectors of U_c in Im L built from an eigenvector f of T:
///  - -1/2 < lambda < 1: two spaces at e^{+-i Theta}, Theta = arccos(lambda - 1/2),
///    v = (d* + e^{+-2i Theta} Sc d* - e^{+-i Theta} Sc^2 d*) f;
///  - lambda = -1/2: one space at -1, v = (-d* + Sc d*) f;
///  - lambda = 1: the |V| vectors (d* + Sc d* - Sc^2 d*) e_u at 1 (f ignored).
/// Throws kOutOfRange for lambda outside [-1/2, 1] and kNotEigenvector if
/// ||(T - lambda) f|| > tol ||f||.
std::vector<EigenSpace> inherited_eigenvectors(const OperatorSet& ops, double lambda,
                                               const Eigen::VectorXcd& f, double tol = 1e-9);

/// All inherited eigenspaces, one per distinct eigenvalue of U_c on Im L,
/// built from an eigendecomposition of T.
std::vector<EigenSpace> inherited_eigenspaces(const OperatorSet& ops, const Tolerances& tol = {});

/// B_mu = ker d  intersect  ker(Sc + mu) for mu = -omega^k.
EigenSpace birth_basis(const OperatorSet& ops, int k, double rank_tol = kDefaultRankTol);
EigenSpace birth_basis(const Graph& g, const TrianglePartition& pi, int k,
                       double rank_tol = kDefaultRankTol);

/// Lifts each kernel vector phi of R to Psi_a = phi_{C(a)}.
EigenSpace birth_minus1_from_kerR(const TrianglePartition& pi, double rank_tol = kDefaultRankTol);

struct DimensionLedger {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t num_arcs = 0;
  std::size_t num_triangles = 0;
  std::size_t b = 0;                 ///< dim ker(T + 1/2)
  std::size_t kernel_T_minus_1 = 0;  ///< dim ker(T - 1)
  std::size_t rank_L = 0;
  std::size_t dim_ker_L = 0;                ///< 3|V| - rank L
  std::size_t dim_ker_Ttilde3_plus_I = 0;   ///< equals dim ker L
  std::size_t dim_L_perp = 0;               ///< |A| - rank L
  std::size_t dim_ker_R = 0;
  std::size_t dim_B_minus1 = 0;
  std::size_t dim_B_minus_omega = 0;
  std::size_t dim_B_minus_omega2 = 0;

  std::size_t expected_rank_L() const { return 3 * num_vertices - b - 2; }
  std::size_t expected_B_minus1() const { return num_triangles + b - num_vertices; }
  std::size_t expected_B_minus_omega() const {
    return (num_arcs + 2 - 2 * num_vertices - num_triangles) / 2;
  }
  bool consistent() const;
};

DimensionLedger compute_dimension_ledger(const Graph& g, const TrianglePartition& pi,
                                         double rank_tol = kDefaultRankTol);

}  // namespace triwalk
