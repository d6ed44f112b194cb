#include "triwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "json_format.hpp"
#include "triwalk/error.hpp"

namespace triwalk {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

Complex omega_power(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return {1.0, 0.0};
    case 1: return kOmega;
    default: return std::conj(kOmega);
  }
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool less_re_im(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

long signed_count(std::size_t a) { return static_cast<long>(a); }

void append_copies(std::vector<Complex>& out, Complex value, long count, const char* what) {
  if (count < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("negative multiplicity for ") + what + "; is the graph triangulable?");
  }
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

}  // namespace

std::vector<EigenvalueCluster> cluster_eigenvalues(std::span<const Complex> values, double tol) {
  const std::size_t n = values.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= tol) sets.unite(i, j);

  std::vector<std::size_t> root_to_cluster(n, std::numeric_limits<std::size_t>::max());
  std::vector<EigenvalueCluster> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = sets.find(i);
    if (root_to_cluster[r] == std::numeric_limits<std::size_t>::max()) {
      root_to_cluster[r] = clusters.size();
      clusters.push_back({Complex{}, 0});
    }
    auto& c = clusters[root_to_cluster[r]];
    c.value += values[i];
    ++c.multiplicity;
  }
  for (auto& c : clusters) c.value /= static_cast<double>(c.multiplicity);
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return less_re_im(a.value, b.value); });
  return clusters;
}

MultisetMatch match_multisets(std::span<const EigenvalueCluster> computed,
                              std::span<const EigenvalueCluster> predicted, double tol) {
  MultisetMatch out;
  bool same_shape = computed.size() == predicted.size();
  std::vector<bool> used(computed.size(), false);
  for (const auto& p : predicted) {
    std::size_t best = computed.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < computed.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(computed[i].value - p.value);
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    out.max_pairing_error = std::max(out.max_pairing_error, best_dist);
    if (best == computed.size()) {
      same_shape = false;
      continue;
    }
    used[best] = true;
    if (computed[best].multiplicity != p.multiplicity) same_shape = false;
  }
  out.matched = same_shape && out.max_pairing_error <= tol;
  return out;
}

std::vector<Complex> predict_spectrum_new(std::span<const double> sigma_T, std::size_t num_vertices,
                                          std::size_t num_edges, std::size_t b, double tol) {
  if ((2 * num_edges) % 3 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "2|E| = " + std::to_string(2 * num_edges) + " is not divisible by 3");
  }
  std::vector<Complex> out;
  std::size_t minus_half = 0;
  for (double lambda : sigma_T) {
    if (lambda < -0.5 - tol || lambda > 1.0 + tol) {
      throw Error(ErrorCode::kOutOfRange,
                  "eigenvalue " + detail::format_double(lambda) + " of T lies outside [-1/2, 1]");
    }
    if (std::abs(lambda - 1.0) <= tol) continue;
    if (std::abs(lambda + 0.5) <= tol) {
      ++minus_half;
      out.emplace_back(-1.0, 0.0);
      continue;
    }
    const double theta = std::acos(std::clamp(lambda - 0.5, -1.0, 1.0));
    out.push_back(std::polar(1.0, theta));
    out.push_back(std::polar(1.0, -theta));
  }
  if (minus_half != b) {
    throw Error(ErrorCode::kInvalidArgument,
                "b = " + std::to_string(b) + " but -1/2 occurs " + std::to_string(minus_half) +
                    " time(s) in sigma(T)");
  }

  const long two_thirds_E = signed_count(2 * num_edges / 3);
  const long V = signed_count(num_vertices);
  append_copies(out, {1.0, 0.0}, V, "1");
  append_copies(out, {-1.0, 0.0}, two_thirds_E - V + signed_count(b), "-1");
  append_copies(out, -kOmega, two_thirds_E - V + 1, "-omega");
  append_copies(out, -std::conj(kOmega), two_thirds_E - V + 1, "-omega^2");
  return out;
}

std::vector<Complex> predict_spectrum_conventional(std::span<const double> sigma_T,
                                                   std::size_t num_vertices,
                                                   std::size_t num_edges, double tol) {
  std::vector<Complex> out;
  std::size_t minus_one = 0;
  for (double lambda : sigma_T) {
    if (lambda < -1.0 - tol || lambda > 1.0 + tol) {
      throw Error(ErrorCode::kOutOfRange,
                  "eigenvalue " + detail::format_double(lambda) + " of T lies outside [-1, 1]");
    }
    if (std::abs(lambda - 1.0) <= tol) {
      out.emplace_back(1.0, 0.0);
    } else if (std::abs(lambda + 1.0) <= tol) {
      ++minus_one;
      out.emplace_back(-1.0, 0.0);
    } else {
      const double theta = std::acos(std::clamp(lambda, -1.0, 1.0));
      out.push_back(std::polar(1.0, theta));
      out.push_back(std::polar(1.0, -theta));
    }
  }
  const long E = signed_count(num_edges);
  const long V = signed_count(num_vertices);
  append_copies(out, {1.0, 0.0}, E - V + 1, "1");
  append_copies(out, {-1.0, 0.0}, E - V + signed_count(minus_one), "-1");
  return out;
}

namespace {

SpectrumReport compare_spectra(std::string walk, const MatrixXd& evolution,
                               const std::vector<Complex>& predicted, std::size_t kernel_dim,
                               const Tolerances& tol) {
  const UnitaryEigen eig = eig_unitary(evolution.cast<Complex>(), tol.residual);
  std::vector<Complex> computed(eig.values.data(), eig.values.data() + eig.values.size());

  SpectrumReport report;
  report.walk = std::move(walk);
  report.computed = cluster_eigenvalues(computed, tol.cluster);
  report.predicted = cluster_eigenvalues(predicted, tol.cluster);
  report.total_computed = computed.size();
  report.total_predicted = predicted.size();
  report.residual_max = eig.residual_max;
  report.kernel_dim = kernel_dim;
  const auto match = match_multisets(report.computed, report.predicted, tol.pairing);
  report.max_pairing_error = match.max_pairing_error;
  report.matched = match.matched && report.total_computed == report.total_predicted;
  return report;
}

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

SpectrumReport verify_mapping(const Graph& g, const TrianglePartition& pi, const Tolerances& tol) {
  const OperatorSet ops = build_operators(g, pi);
  const auto sigma_T = to_vector(eig_symmetric(ops.T, tol.residual).values);
  const MatrixXd shifted = ops.T + 0.5 * MatrixXd::Identity(ops.T.rows(), ops.T.cols());
  const auto b = static_cast<std::size_t>(kernel(shifted, tol.rank).cols());
  const auto predicted =
      predict_spectrum_new(sigma_T, g.num_vertices(), g.num_edges(), b, tol.eigenvalue);
  return compare_spectra("moving-shift", ops.Uc, predicted, b, tol);
}

SpectrumReport verify_mapping(const Graph& g, std::span<const DirectedTriangle> triangles,
                              const Tolerances& tol) {
  const auto pi = TrianglePartition::from_triangles(
      g, std::vector<DirectedTriangle>(triangles.begin(), triangles.end()));
  return verify_mapping(g, pi, tol);
}

SpectrumReport verify_conventional(const Graph& g, const Tolerances& tol) {
  const MatrixXd T = build_T(g);
  const auto sigma_T = to_vector(eig_symmetric(T, tol.residual).values);
  const MatrixXd shifted = T + MatrixXd::Identity(T.rows(), T.cols());
  const auto k = static_cast<std::size_t>(kernel(shifted, tol.rank).cols());
  const auto predicted =
      predict_spectrum_conventional(sigma_T, g.num_vertices(), g.num_edges(), tol.eigenvalue);
  const ArcSet arcs(g);
  const MatrixXd U = build_flipflop(arcs) * grover_coin(build_boundary(g));
  return compare_spectra("grover", U, predicted, k, tol);
}

std::string report_to_json(const SpectrumReport& report) {
  auto clusters = [](const std::vector<EigenvalueCluster>& cs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cs) {
      nlohmann::ordered_json e;
      e["re"] = c.value.real();
      e["im"] = c.value.imag();
      e["mult"] = c.multiplicity;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  nlohmann::ordered_json j;
  j["walk"] = report.walk;
  j["computed"] = clusters(report.computed);
  j["predicted"] = clusters(report.predicted);
  j["matched"] = report.matched;
  j["max_pairing_error"] = report.max_pairing_error;
  j["residual_max"] = report.residual_max;
  j["totals"] = {{"computed", report.total_computed}, {"predicted", report.total_predicted}};
  j["kernel_dim"] = report.kernel_dim;
  return detail::dump_json(j);
}

std::vector<EigenSpace> inherited_eigenvectors(const OperatorSet& ops, double lambda,
                                               const VectorXcd& f, double tol) {
  if (lambda < -0.5 - tol || lambda > 1.0 + tol) {
    throw Error(ErrorCode::kOutOfRange,
                "lambda = " + detail::format_double(lambda) + " lies outside [-1/2, 1]");
  }
  const MatrixXcd dstar = ops.d.transpose().cast<Complex>();
  const MatrixXcd Sc = ops.Sc.cast<Complex>();
  const MatrixXcd Sc_dstar = Sc * dstar;
  const MatrixXcd Sc2_dstar = Sc * Sc_dstar;

  if (std::abs(lambda - 1.0) <= tol) {
    return {EigenSpace{{1.0, 0.0}, dstar + Sc_dstar - Sc2_dstar, EigenKind::kInherited}};
  }

  if (f.size() != ops.T.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "f has the wrong length");
  }
  const double fnorm = f.norm();
  if (fnorm == 0.0) throw Error(ErrorCode::kNotEigenvector, "f is the zero vector");
  const double res = (ops.T.cast<Complex>() * f - lambda * f).norm();
  if (res > tol * fnorm) {
    throw Error(ErrorCode::kNotEigenvector, "f is not an eigenvector of T at lambda = " +
                                                detail::format_double(lambda) + " (residual " +
                                                detail::format_double(res / fnorm) + ")");
  }

  if (std::abs(lambda + 0.5) <= tol) {
    MatrixXcd v = (-dstar + Sc_dstar) * f;
    return {EigenSpace{{-1.0, 0.0}, std::move(v), EigenKind::kInherited}};
  }

  const double theta = std::acos(std::clamp(lambda - 0.5, -1.0, 1.0));
  std::vector<EigenSpace> out;
  for (double sign : {1.0, -1.0}) {
    const Complex Lambda = std::polar(1.0, sign * theta);
    MatrixXcd v = (dstar + Lambda * Lambda * Sc_dstar - Lambda * Sc2_dstar) * f;
    out.push_back({Lambda, std::move(v), EigenKind::kInherited});
  }
  return out;
}

std::vector<EigenSpace> inherited_eigenspaces(const OperatorSet& ops, const Tolerances& tol) {
  const SymmetricEigen eig = eig_symmetric(ops.T, tol.residual);
  std::vector<EigenSpace> out;
  const VectorXcd unused = VectorXcd::Zero(ops.T.rows());
  auto unit = inherited_eigenvectors(ops, 1.0, unused, tol.residual);
  out.push_back(std::move(unit.front()));

  const Index n = eig.values.size();
  Index i = 0;
  while (i < n) {
    Index j = i + 1;
    while (j < n && eig.values(j) - eig.values(i) <= tol.eigenvalue) ++j;
    const double lambda = eig.values.segment(i, j - i).mean();
    if (std::abs(lambda - 1.0) > tol.eigenvalue) {
      std::vector<EigenSpace> group;
      for (Index c = i; c < j; ++c) {
        auto spaces = inherited_eigenvectors(ops, lambda, eig.vectors.col(c).cast<Complex>(),
                                             tol.residual);
        if (group.empty()) {
          group = std::move(spaces);
          continue;
        }
        for (std::size_t s = 0; s < group.size(); ++s) {
          auto& basis = group[s].basis;
          basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
          basis.col(basis.cols() - 1) = spaces[s].basis.col(0);
        }
      }
      for (auto& s : group) out.push_back(std::move(s));
    }
    i = j;
  }
  return out;
}

EigenSpace birth_basis(const OperatorSet& ops, int k, double rank_tol) {
  const Complex mu = -omega_power(k);
  const Index V = ops.d.rows();
  const Index m = ops.d.cols();
  MatrixXcd stacked(V + m, m);
  stacked.topRows(V) = ops.d.cast<Complex>();
  stacked.bottomRows(m) = ops.Sc.cast<Complex>() + mu * MatrixXcd::Identity(m, m);
  return {mu, kernel(stacked, rank_tol), EigenKind::kBirth};
}

EigenSpace birth_basis(const Graph& g, const TrianglePartition& pi, int k, double rank_tol) {
  return birth_basis(build_operators(g, pi), k, rank_tol);
}

EigenSpace birth_minus1_from_kerR(const TrianglePartition& pi, double rank_tol) {
  const MatrixXd phi = kernel(MatrixXd(build_R(pi).cast<double>()), rank_tol);
  const auto m = static_cast<Index>(pi.arc_set().size());
  MatrixXcd basis(m, phi.cols());
  for (Index a = 0; a < m; ++a)
    basis.row(a) = phi.row(static_cast<Index>(pi.triangle_of(static_cast<std::size_t>(a))))
                       .cast<Complex>();
  return {{-1.0, 0.0}, std::move(basis), EigenKind::kBirth};
}

bool DimensionLedger::consistent() const {
  const long two_dim_omega = static_cast<long>(num_arcs) + 2 - 2 * static_cast<long>(num_vertices) -
                             static_cast<long>(num_triangles);
  return kernel_T_minus_1 == 1 && rank_L == expected_rank_L() &&
         dim_ker_L == dim_ker_Ttilde3_plus_I && dim_ker_R == dim_B_minus1 &&
         dim_B_minus1 == expected_B_minus1() && two_dim_omega >= 0 && two_dim_omega % 2 == 0 &&
         dim_B_minus_omega == static_cast<std::size_t>(two_dim_omega / 2) &&
         dim_B_minus_omega2 == dim_B_minus_omega &&
         dim_L_perp == dim_B_minus1 + dim_B_minus_omega + dim_B_minus_omega2;
}

DimensionLedger compute_dimension_ledger(const Graph& g, const TrianglePartition& pi,
                                         double rank_tol) {
  const OperatorSet ops = build_operators(g, pi);
  const LiftedSystem lifted = build_lifted(ops);
  const Index V = ops.T.rows();

  DimensionLedger out;
  out.num_vertices = g.num_vertices();
  out.num_edges = g.num_edges();
  out.num_arcs = ops.arcs.size();
  out.num_triangles = pi.size();
  out.b = static_cast<std::size_t>(
      kernel(MatrixXd(ops.T + 0.5 * MatrixXd::Identity(V, V)), rank_tol).cols());
  out.kernel_T_minus_1 = static_cast<std::size_t>(
      kernel(MatrixXd(ops.T - MatrixXd::Identity(V, V)), rank_tol).cols());
  out.rank_L = numerical_rank(lifted.L, rank_tol);
  out.dim_ker_L = static_cast<std::size_t>(3 * V) - out.rank_L;
  const MatrixXd cube_plus_I = lifted.Ttilde * lifted.Ttilde * lifted.Ttilde +
                               MatrixXd::Identity(3 * V, 3 * V);
  out.dim_ker_Ttilde3_plus_I = static_cast<std::size_t>(kernel(cube_plus_I, rank_tol).cols());
  out.dim_L_perp = out.num_arcs - out.rank_L;
  out.dim_ker_R = static_cast<std::size_t>(kernel(MatrixXd(ops.R.cast<double>()), rank_tol).cols());
  out.dim_B_minus1 = birth_basis(ops, 0, rank_tol).dim();
  out.dim_B_minus_omega = birth_basis(ops, 1, rank_tol).dim();
  out.dim_B_minus_omega2 = birth_basis(ops, 2, rank_tol).dim();
  return out;
}

}  // namespace triwalk
