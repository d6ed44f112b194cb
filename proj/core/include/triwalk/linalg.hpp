#pragma once

#include <complex>
#include <cstddef>
#include <type_traits>

#include <Eigen/Dense>

namespace triwalk {

using Complex = std::complex<double>;

/// Singular values at or below this fraction of the largest are zero.
inline constexpr double kDefaultRankTol = 1e-9;

struct SymmetricEigen {
  Eigen::VectorXd values;   ///< ascending
  Eigen::MatrixXd vectors;  ///< orthonormal columns
};

/// Throws kNotSymmetric if max|M - M^T| > 1e-12, kNumerical if the
/// residual or orthonormality check exceeds tol.
SymmetricEigen eig_symmetric(const Eigen::MatrixXd& M, double tol = 1e-9);

struct UnitaryEigen {
  Eigen::VectorXcd values;   ///< sorted by (Re, Im)
  Eigen::MatrixXcd vectors;  ///< unit columns
  double residual_max = 0.0; ///< max ||M v - lambda v|| over columns
};

/// Throws kNotUnitary if max|M* M - I| > 1e-10, kNumerical if an eigenvalue
/// leaves the unit circle or a residual exceeds tol.
UnitaryEigen eig_unitary(const Eigen::MatrixXcd& M, double tol = 1e-9);

/// Orthonormal basis of the null space from a full SVD.
Eigen::MatrixXd kernel(const Eigen::MatrixXd& M, double rank_tol = kDefaultRankTol);
Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& M, double rank_tol = kDefaultRankTol);

std::size_t numerical_rank(const Eigen::MatrixXd& M, double rank_tol = kDefaultRankTol);
std::size_t numerical_rank(const Eigen::MatrixXcd& M, double rank_tol = kDefaultRankTol);

namespace detail {
template <typename Derived>
auto evaluate_dense(const Eigen::MatrixBase<Derived>& M) {
  if constexpr (Eigen::NumTraits<typename Derived::Scalar>::IsComplex) {
    return Eigen::MatrixXcd(M.template cast<std::complex<double>>());
  } else {
    return Eigen::MatrixXd(M.template cast<double>());
  }
}
}  // namespace detail

/// Overloads for Eigen expressions and integer matrices.
template <typename Derived>
auto kernel(const Eigen::MatrixBase<Derived>& M, double rank_tol = kDefaultRankTol) {
  return kernel(detail::evaluate_dense(M), rank_tol);
}
template <typename Derived>
std::size_t numerical_rank(const Eigen::MatrixBase<Derived>& M,
                           double rank_tol = kDefaultRankTol) {
  return numerical_rank(detail::evaluate_dense(M), rank_tol);
}

/// Orthonormal basis of the column space.
Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& M, double rank_tol = kDefaultRankTol);

/// Sine of the largest principal angle between the column spans of A and B
/// (both assumed to have full column rank). Returns 1 if the dimensions
/// differ.
double subspace_distance(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

/// ||M v - lambda v|| / ||v||.
double relative_residual(const Eigen::MatrixXcd& M, Complex lambda, const Eigen::VectorXcd& v);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : static_cast<double>(m.cwiseAbs().maxCoeff());
}

}  // namespace triwalk
