#include "sympf/points.hpp"

#include "sympf/errors.hpp"
#include "sympf/symplectic.hpp"

namespace sympf {

PointCheck check_point(const Matrix& y) {
  if (!y.is_square() || y.rows() < 2 || y.rows() % 2 != 0) return {false, "matrix is not n x n with n even"};
  if (!y.is_skew()) return {false, "Y + Y^T = 0"};
  const int n = static_cast<int>(y.rows());
  const int r = n / 2;
  Matrix j = symplectic_form(n);
  if (!(y.transpose() * j * y).is_zero()) return {false, "Y^T J Y = 0"};
  Rational tr = 0;
  for (int i = 0; i < r; ++i) tr += y(i, r + i);
  if (sgn(tr) != 0) return {false, "sum_i Y_{i,ibar} = 0 (residual " + tr.get_str() + ")"};
  auto cp = characteristic_polynomial(Rational(-1) * (j * y));
  for (int k = 0; k < n; ++k)
    if (sgn(cp[k]) != 0) return {false, "char poly of -JY equals T^n"};
  return {};
}

PointV PointV::from_matrix(Matrix y) {
  PointCheck c = check_point(y);
  if (!c.ok) throw UsageError("not a point of V: fails " + c.failure);
  return PointV(std::move(y));
}

Matrix random_symplectic(int n, std::mt19937_64& rng, int steps) {
  if (n < 4 || n % 2 != 0) throw UsageError("random_symplectic needs even n >= 4");
  if (steps < 0) throw UsageError("steps must be non-negative");
  const int r = n / 2;
  std::uniform_int_distribution<int> kind_dist(0, 2), level(1, r), mu_dist(0, 5);
  Matrix g = Matrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    auto kind = static_cast<GeneratorKind>(kind_dist(rng));
    int i = level(rng), j = level(rng);
    while (kind != GeneratorKind::Shear && j == i) j = level(rng);
    int mu = mu_dist(rng) - 3;
    if (mu >= 0) ++mu;
    g = g * generator_matrix({kind, i, j}, r, mu);
  }
  return g;
}

Matrix random_symplectic(int n, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  return random_symplectic(n, rng, steps);
}

Matrix block_point(const Matrix& a, const Matrix& g) {
  const std::size_t r = a.rows();
  if (!a.is_skew()) throw UsageError("block_point: A must be skew");
  if (g.rows() != 2 * r || !g.is_square()) throw UsageError("block_point: g must be 2r x 2r");
  Matrix y0(2 * r, 2 * r);
  y0.set_block(r, r, a);
  return g.transpose() * y0 * g;
}

PointV sample_point(int n, std::mt19937_64& rng, int steps) {
  if (n < 4 || n % 2 != 0) throw UsageError("sample_point needs even n >= 4");
  const int r = n / 2;
  std::uniform_int_distribution<int> entry(-5, 5);
  Matrix a(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      a(i, j) = entry(rng);
      a(j, i) = -a(i, j);
    }
  Matrix g = random_symplectic(n, rng, steps);
  return PointV::from_matrix(block_point(a, g));
}

PointV sample_point(int n, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  return sample_point(n, rng, steps);
}

}  // namespace sympf
