#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace triwalk {

/// Permutation of {0, ..., n-1} stored as its image array. Composition and
/// powers are exact, so group identities such as p^3 = id need no tolerance.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images)
      : images_(std::move(images)) {}

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    std::vector<std::size_t> out(other.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other(i)];
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[images_[i]] = i;
    return Permutation(std::move(out));
  }

  Permutation power(unsigned k) const {
    Permutation out = identity(size());
    for (unsigned i = 0; i < k; ++i) out = compose(out);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (images_[i] == i) return true;
    return false;
  }

  /// P with P(p(b), b) = 1, so (P x)_{p(b)} = x_b.
  Eigen::MatrixXd matrix() const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t b = 0; b < size(); ++b)
      m(static_cast<Eigen::Index>(images_[b]), static_cast<Eigen::Index>(b)) = 1.0;
    return m;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace triwalk
