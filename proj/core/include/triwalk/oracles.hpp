#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/graph.hpp"
#include "triwalk/linalg.hpp"
#include "triwalk/triangulation.hpp"

namespace triwalk {

/// Closed-form data for the double cone Gamma_n with vertex order
/// (u+, u-, x_0, ..., x_{n-1}).
struct DoubleConeSpec {
  std::size_t n = 0;
  Complex zeta;               ///< e^{2 pi i / n}
  Eigen::Matrix2d Qprime;     ///< [[0, 1], [1/2, 1/2]]
  Eigen::MatrixXd Jtilde;     ///< (n+2) x 2: e_{u+} + e_{u-} and the cycle indicator
  Eigen::MatrixXd Tprime;     ///< D^{-1} A
};

DoubleConeSpec double_cone_spec(std::size_t n);

/// {0} + {cos(2 pi j / n) / 2 : j = 1..n-1} + {1, -1/2}, sorted ascending.
std::vector<double> double_cone_T_spectrum(std::size_t n);

struct TprimeEigenpair {
  double eigenvalue;
  Eigen::VectorXcd vector;
};

/// n + 2 independent eigenvectors of T' in the order: [1,-1,0,...] at 0,
/// [0,0,v_j] at cos(2 pi j/n)/2 for j = 1..n-1, then Jtilde [1,1] at 1 and
/// Jtilde [-2,1] at -1/2. Here (v_j)_i = zeta^{ij}.
std::vector<TprimeEigenpair> double_cone_T_eigenvectors(std::size_t n);

/// Values on the cycle arcs of Gamma_n: a_j on (x_j, x_{j+1}) and b_j on
/// (x_{j+1}, x_j).
struct BirthVectorRecipe {
  std::size_t n = 0;
  int k = 0;       ///< eigenvalue -omega^k
  std::size_t l = 0;
  bool even_extra = false;
  std::vector<Complex> a;
  std::vector<Complex> b;
};

/// Closed-form cycle values for -omega^k and 1 <= l <= n-1.
///   k = 0: a_j = zeta^{lj},                    b_j = -zeta^{lj}
///   k = 1: a_j = -(omega + zeta^{-l}) zeta^{-lj},   b_j = (1 + omega zeta^{-l}) zeta^{-lj}
///   k = 2: a_j = -(omega^2 + zeta^l) zeta^{lj},     b_j = (1 + omega^2 zeta^l) zeta^{lj}
BirthVectorRecipe birth_recipe(std::size_t n, int k, std::size_t l);

/// a_j = b_j = (-1)^j, in B_{-1} for even n.
BirthVectorRecipe even_extra_recipe(std::size_t n);

/// Extends the cycle-arc values to every arc of Gamma_n using
/// Psi_{tau^{-1}(a)} = omega^k Psi_a inside each triangle of the canonical
/// partition.
Eigen::VectorXcd complete_birth_vector(const BirthVectorRecipe& recipe,
                                       const TrianglePartition& pi);

Eigen::VectorXcd double_cone_birth_vector(std::size_t n, int k, std::size_t l);
Eigen::VectorXcd double_cone_even_extra_vector(std::size_t n);

/// All closed-form vectors for -omega^k as columns: l = 1..n-1, plus the
/// even extra vector when k = 0 and n is even.
Eigen::MatrixXcd double_cone_birth_family(std::size_t n, int k);

/// a_j + omega^k a_{j+1} + omega^k b_j + b_{j+1} = 0 for all j (mod n)
/// and sum a = sum b = 0. Throws kInvalidArgument if |a| != n or |b| != n.
bool check_birth_conditions(std::size_t n, int k, std::span<const Complex> a,
                            std::span<const Complex> b, double tol = 1e-10);

/// Eigendecomposition of a moving-shift evolution assembled entry by entry
/// from the partition, independent of the operator builders. Throws
/// kDimensionCap if |A| > max_dim.
UnitaryEigen brute_force_spectrum(const Graph& g, const TrianglePartition& pi,
                                  std::size_t max_dim = 2000);

}  // namespace triwalk
