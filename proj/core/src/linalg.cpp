#include "triwalk/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "triwalk/error.hpp"

namespace triwalk {

using Eigen::Index;

SymmetricEigen eig_symmetric(const Eigen::MatrixXd& M, double tol) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::kNotSymmetric, "matrix is not square");
  if (max_abs(M - M.transpose()) > 1e-12)
    throw Error(ErrorCode::kNotSymmetric, "matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::kNumerical, "symmetric eigensolver did not converge");

  SymmetricEigen out{solver.eigenvalues(), solver.eigenvectors()};
  const double scale = std::max(1.0, max_abs(M));
  const double residual = max_abs(M * out.vectors - out.vectors * out.values.asDiagonal());
  const double ortho =
      max_abs(out.vectors.transpose() * out.vectors - Eigen::MatrixXd::Identity(M.rows(), M.rows()));
  if (residual > tol * scale || ortho > tol) {
    throw Error(ErrorCode::kNumerical, "symmetric eigendecomposition failed accuracy check (residual " +
                                           std::to_string(residual) + ")");
  }
  return out;
}

UnitaryEigen eig_unitary(const Eigen::MatrixXcd& M, double tol) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::kNotUnitary, "matrix is not square");
  const Index n = M.rows();
  if (max_abs(M.adjoint() * M - Eigen::MatrixXcd::Identity(n, n)) > 1e-10)
    throw Error(ErrorCode::kNotUnitary, "matrix is not unitary");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, true);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::kNumerical, "complex eigensolver did not converge");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  const auto& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (ev(a).real() != ev(b).real()) return ev(a).real() < ev(b).real();
    return ev(a).imag() < ev(b).imag();
  });

  UnitaryEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    out.values(i) = ev(order[static_cast<std::size_t>(i)]);
    Eigen::VectorXcd v = solver.eigenvectors().col(order[static_cast<std::size_t>(i)]);
    out.vectors.col(i) = v / v.norm();
  }
  for (Index i = 0; i < n; ++i) {
    if (std::abs(std::abs(out.values(i)) - 1.0) > tol)
      throw Error(ErrorCode::kNumerical, "eigenvalue off the unit circle");
    out.residual_max =
        std::max(out.residual_max, relative_residual(M, out.values(i), out.vectors.col(i)));
  }
  if (out.residual_max > tol) {
    throw Error(ErrorCode::kNumerical,
                "unitary eigendecomposition residual " + std::to_string(out.residual_max));
  }
  return out;
}

namespace {

template <typename Matrix>
Matrix kernel_impl(const Matrix& M, double rank_tol) {
  const Index cols = M.cols();
  if (M.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * sigma_max) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

template <typename Matrix>
std::size_t rank_impl(const Matrix& M, double rank_tol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv(0);
  std::size_t rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * sigma_max) ++rank;
  return rank;
}

}  // namespace

Eigen::MatrixXd kernel(const Eigen::MatrixXd& M, double rank_tol) { return kernel_impl(M, rank_tol); }
Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& M, double rank_tol) { return kernel_impl(M, rank_tol); }

std::size_t numerical_rank(const Eigen::MatrixXd& M, double rank_tol) { return rank_impl(M, rank_tol); }
std::size_t numerical_rank(const Eigen::MatrixXcd& M, double rank_tol) { return rank_impl(M, rank_tol); }

Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& M, double rank_tol) {
  if (M.cols() == 0) return Eigen::MatrixXcd(M.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * sv(0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

double subspace_distance(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  const Eigen::MatrixXcd QA = orthonormal_basis(A);
  const Eigen::MatrixXcd QB = orthonormal_basis(B);
  if (QA.cols() != QB.cols()) return 1.0;
  if (QA.cols() == 0) return 0.0;
  const Eigen::MatrixXcd residual = QA - QB * (QB.adjoint() * QA);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  return svd.singularValues()(0);
}

double relative_residual(const Eigen::MatrixXcd& M, Complex lambda, const Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (norm == 0.0) return 0.0;
  return (M * v - lambda * v).norm() / norm;
}

}  // namespace triwalk
