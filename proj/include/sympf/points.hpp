#pragma once

#include <random>
#include <string>

#include "sympf/matrix.hpp"

namespace sympf {

struct PointCheck {
  bool ok = true;
  std::string failure;  // first failing condition
};

// Skew, YᵀJY = 0, Σ Y_{i,ī} = 0 and char poly of -JY equal to T^n.
PointCheck check_point(const Matrix& y);

// A matrix that passed check_point.
class PointV {
 public:
  static PointV from_matrix(Matrix y);  // throws UsageError naming the failing condition
  const Matrix& matrix() const { return y_; }
  int n() const { return static_cast<int>(y_.rows()); }

 private:
  explicit PointV(Matrix y) : y_(std::move(y)) {}
  Matrix y_;
};

// Product of `steps` random generators with μ in {-3..3}∖{0}.
Matrix random_symplectic(int n, std::mt19937_64& rng, int steps);
Matrix random_symplectic(int n, std::uint64_t seed, int steps);

// gᵀ [[0,0],[0,A]] g.
Matrix block_point(const Matrix& a, const Matrix& g);
// Block point with random integer skew A (entries in [-5,5]) moved by a random symplectic g.
PointV sample_point(int n, std::mt19937_64& rng, int steps = 8);
PointV sample_point(int n, std::uint64_t seed, int steps = 8);

}  // namespace sympf
