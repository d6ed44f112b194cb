#include "triwalk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "triwalk/error.hpp"
#include "triwalk/spectral.hpp"

namespace triwalk {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

namespace {

constexpr Vertex kPlus = 0;
constexpr Vertex kMinus = 1;

void require_cone_size(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "double cone needs n >= 3, got " + std::to_string(n));
  }
}

Vertex cycle_vertex(std::size_t n, std::size_t i) { return 2 + i % n; }

Complex zeta_power(std::size_t n, long e) {
  const long m = static_cast<long>(n);
  const long r = ((e % m) + m) % m;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

DoubleConeSpec double_cone_spec(std::size_t n) {
  require_cone_size(n);
  const Graph g = gen_double_cone(n);
  const auto V = static_cast<Index>(n + 2);

  DoubleConeSpec out;
  out.n = n;
  out.zeta = zeta_power(n, 1);
  out.Qprime << 0.0, 1.0, 0.5, 0.5;
  out.Jtilde = MatrixXd::Zero(V, 2);
  out.Jtilde(kPlus, 0) = 1.0;
  out.Jtilde(kMinus, 0) = 1.0;
  for (std::size_t i = 0; i < n; ++i) out.Jtilde(static_cast<Index>(cycle_vertex(n, i)), 1) = 1.0;

  out.Tprime = MatrixXd::Zero(V, V);
  for (const auto& e : g.edges()) {
    out.Tprime(static_cast<Index>(e.u), static_cast<Index>(e.v)) =
        1.0 / static_cast<double>(g.degree(e.u));
    out.Tprime(static_cast<Index>(e.v), static_cast<Index>(e.u)) =
        1.0 / static_cast<double>(g.degree(e.v));
  }
  return out;
}

std::vector<double> double_cone_T_spectrum(std::size_t n) {
  require_cone_size(n);
  std::vector<double> out{0.0, 1.0, -0.5};
  for (std::size_t j = 1; j < n; ++j) {
    out.push_back(0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                 static_cast<double>(n)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TprimeEigenpair> double_cone_T_eigenvectors(std::size_t n) {
  require_cone_size(n);
  const auto V = static_cast<Index>(n + 2);
  const DoubleConeSpec spec = double_cone_spec(n);
  std::vector<TprimeEigenpair> out;

  VectorXcd v = VectorXcd::Zero(V);
  v(kPlus) = 1.0;
  v(kMinus) = -1.0;
  out.push_back({0.0, v});

  for (std::size_t j = 1; j < n; ++j) {
    VectorXcd vj = VectorXcd::Zero(V);
    for (std::size_t i = 0; i < n; ++i)
      vj(static_cast<Index>(cycle_vertex(n, i))) = zeta_power(n, static_cast<long>(i * j));
    const double lambda = 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                                         static_cast<double>(n));
    out.push_back({lambda, std::move(vj)});
  }

  const Eigen::Vector2d q_one(1.0, 1.0);
  const Eigen::Vector2d q_half(-2.0, 1.0);
  out.push_back({1.0, (spec.Jtilde * q_one).cast<Complex>()});
  out.push_back({-0.5, (spec.Jtilde * q_half).cast<Complex>()});
  return out;
}

BirthVectorRecipe birth_recipe(std::size_t n, int k, std::size_t l) {
  require_cone_size(n);
  if (k < 0 || k > 2) {
    throw Error(ErrorCode::kInvalidArgument, "k must be 0, 1 or 2, got " + std::to_string(k));
  }
  if (l < 1 || l >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "l must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(l));
  }
  BirthVectorRecipe r{n, k, l, false, std::vector<Complex>(n), std::vector<Complex>(n)};
  const Complex w = omega_power(k);
  const long ll = static_cast<long>(l);
  for (std::size_t j = 0; j < n; ++j) {
    const long lj = ll * static_cast<long>(j);
    switch (k) {
      case 0:
        r.a[j] = zeta_power(n, lj);
        r.b[j] = -zeta_power(n, lj);
        break;
      case 1:
        r.a[j] = -(w + zeta_power(n, -ll)) * zeta_power(n, -lj);
        r.b[j] = (1.0 + w * zeta_power(n, -ll)) * zeta_power(n, -lj);
        break;
      default:
        r.a[j] = -(w + zeta_power(n, ll)) * zeta_power(n, lj);
        r.b[j] = (1.0 + w * zeta_power(n, ll)) * zeta_power(n, lj);
        break;
    }
  }
  return r;
}

BirthVectorRecipe even_extra_recipe(std::size_t n) {
  require_cone_size(n);
  if (n % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "the alternating vector needs even n, got " + std::to_string(n));
  }
  BirthVectorRecipe r{n, 0, 0, true, std::vector<Complex>(n), std::vector<Complex>(n)};
  for (std::size_t j = 0; j < n; ++j) r.a[j] = r.b[j] = (j % 2 == 0) ? 1.0 : -1.0;
  return r;
}

VectorXcd complete_birth_vector(const BirthVectorRecipe& recipe, const TrianglePartition& pi) {
  const std::size_t n = recipe.n;
  if (recipe.a.size() != n || recipe.b.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "recipe lengths differ from n");
  }
  if (pi.num_vertices() != n + 2) {
    throw Error(ErrorCode::kInvalidArgument, "partition does not belong to this double cone");
  }
  const ArcSet& arcs = pi.arc_set();
  const Permutation inverse = pi.tau().inverse();
  const Complex w = omega_power(recipe.k);

  VectorXcd psi = VectorXcd::Zero(static_cast<Index>(arcs.size()));
  auto seed = [&](Arc arc, Complex value) {
    const std::size_t a = arcs.index(arc);
    const std::size_t p = inverse(a);
    const std::size_t q = inverse(p);
    psi(static_cast<Index>(a)) = value;
    psi(static_cast<Index>(p)) = w * value;
    psi(static_cast<Index>(q)) = w * w * value;
  };
  for (std::size_t j = 0; j < n; ++j) {
    const Vertex xj = cycle_vertex(n, j);
    const Vertex xnext = cycle_vertex(n, j + 1);
    seed({xj, xnext}, recipe.a[j]);
    seed({xnext, xj}, recipe.b[j]);
  }
  return psi;
}

VectorXcd double_cone_birth_vector(std::size_t n, int k, std::size_t l) {
  return complete_birth_vector(birth_recipe(n, k, l), canonical_double_cone_partition(n));
}

VectorXcd double_cone_even_extra_vector(std::size_t n) {
  return complete_birth_vector(even_extra_recipe(n), canonical_double_cone_partition(n));
}

MatrixXcd double_cone_birth_family(std::size_t n, int k) {
  const TrianglePartition pi = canonical_double_cone_partition(n);
  const bool extra = k == 0 && n % 2 == 0;
  MatrixXcd out(static_cast<Index>(pi.arc_set().size()), static_cast<Index>(n - 1 + (extra ? 1 : 0)));
  for (std::size_t l = 1; l < n; ++l)
    out.col(static_cast<Index>(l - 1)) = complete_birth_vector(birth_recipe(n, k, l), pi);
  if (extra) out.col(out.cols() - 1) = complete_birth_vector(even_extra_recipe(n), pi);
  return out;
}

bool check_birth_conditions(std::size_t n, int k, std::span<const Complex> a,
                            std::span<const Complex> b, double tol) {
  if (a.size() != n || b.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected sequences of length " + std::to_string(n) + ", got " +
                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  const Complex w = omega_power(k);
  Complex sum_a{};
  Complex sum_b{};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t next = (j + 1) % n;
    if (std::abs(a[j] + w * a[next] + w * b[j] + b[next]) > tol) return false;
    sum_a += a[j];
    sum_b += b[j];
  }
  return std::abs(sum_a) <= tol && std::abs(sum_b) <= tol;
}

UnitaryEigen brute_force_spectrum(const Graph& g, const TrianglePartition& pi,
                                  std::size_t max_dim) {
  const ArcSet& arcs = pi.arc_set();
  const std::size_t m = arcs.size();
  if (m > max_dim) {
    throw Error(ErrorCode::kDimensionCap, "arc space dimension " + std::to_string(m) +
                                              " exceeds the cap " + std::to_string(max_dim));
  }
  MatrixXcd U = MatrixXcd::Zero(static_cast<Index>(m), static_cast<Index>(m));
  for (const auto& tri : pi.triangles()) {
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t c = arcs.index(tri.arcs[s]);
      const std::size_t next = arcs.index(tri.arcs[(s + 1) % 3]);
      const Vertex x = tri.arcs[s].terminus;
      const double coin = 2.0 / static_cast<double>(g.degree(x));
      for (const std::size_t b : arcs.in_arcs(x)) {
        U(static_cast<Index>(next), static_cast<Index>(b)) += coin;
      }
      U(static_cast<Index>(next), static_cast<Index>(c)) -= 1.0;
    }
  }
  return eig_unitary(U);
}

}  // namespace triwalk
