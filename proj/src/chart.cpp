#include "sympf/chart.hpp"

#include <algorithm>

#include "sympf/errors.hpp"
#include "sympf/pfaffian.hpp"

namespace sympf {

void validate_chart_datum(const ChartDatum& d) {
  const std::size_t r = d.a.rows();
  if (!d.a.is_square() || d.c.rows() != r || !d.c.is_square()) throw UsageError("chart datum: A and C must be r x r");
  if (r == 0 || r % 2 != 0) throw UsageError("chart datum: r must be even (n divisible by 4)");
  if (!d.a.is_symmetric()) throw UsageError("chart datum: A must be symmetric");
  if (!d.c.is_skew()) throw UsageError("chart datum: C must be skew-symmetric");
  if (sgn(determinant(d.c)) == 0) throw UsageError("chart datum: C must be invertible");
}

PointV chart_point(const ChartDatum& d) {
  validate_chart_datum(d);
  const std::size_t r = d.a.rows(), n = 2 * r;
  Matrix big(2 * n, n);
  big.set_block(0, 0, d.a);
  big.set_block(r, 0, Matrix::identity(n));
  big.set_block(r + n, 0, d.c);
  big.set_block(r + n, r, Rational(-1) * d.a.transpose());
  Matrix g = big.block(n, 0, n, n);
  auto g_inv = inverse(g);
  if (!g_inv) throw std::logic_error("chart: G is singular although det C != 0");
  Matrix m = big * *g_inv;
  if (!(m.block(n, 0, n, n) == Matrix::identity(n))) throw std::logic_error("chart: bottom block of N G^-1 is not I");
  return PointV::from_matrix(m.block(0, 0, n, n));
}

Rational trace_identity_check(const ChartDatum& d) {
  validate_chart_datum(d);
  return trace(d.a * *inverse(d.c));
}

Rational f_minor(const Matrix& y) {
  if (!y.is_square() || y.rows() % 4 != 0) throw UsageError("f_minor needs n divisible by 4");
  const int r = static_cast<int>(y.rows() / 2);
  std::vector<int> ids;
  for (int i = 0; i < r; ++i) ids.push_back(r + i);
  return determinant(y.submatrix(ids, ids));
}

Poly f_minor_generic(int n) {
  if (n < 4 || n % 4 != 0) throw UsageError("f_minor needs n divisible by 4");
  const int r = n / 2;
  // Leibniz expansion over permutations of the barred block.
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  Poly out(n);
  do {
    int inv = 0;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) ++inv;
    Poly term = Poly::constant(n, inv % 2 ? -1 : 1);
    for (int i = 0; i < r && !term.is_zero(); ++i) term = term * Poly::y(n, r + i + 1, r + perm[i] + 1);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ChartDatum random_chart_datum(int r, std::mt19937_64& rng) {
  if (r < 2 || r % 2 != 0) throw UsageError("chart datum needs even r >= 2");
  std::uniform_int_distribution<int> entry(-5, 5);
  ChartDatum d{Matrix(r, r), Matrix(r, r)};
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) d.a(i, j) = d.a(j, i) = entry(rng);
  do {
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        d.c(i, j) = entry(rng);
        d.c(j, i) = -d.c(i, j);
      }
  } while (sgn(determinant(d.c)) == 0);
  return d;
}

NzdResult nzd_closure_check(const Tableau& t, Straightener& s) {
  const int r = s.r();
  if (r % 2 != 0) throw UsageError("nzd_closure_check needs r even");
  if (!t.is_even() || !is_symplectic_standard(t)) throw UsageError("nzd_closure_check needs a symplectic standard even tableau");
  Row top;
  for (int i = 1; i <= r; ++i) top.push_back(Index::bar(i));
  NzdResult res{false, s.multiply_basis(Tableau({top}), t)};
  std::vector<Row> rows{top};
  rows.insert(rows.end(), t.rows().begin(), t.rows().end());
  Tableau expected(std::move(rows));
  if (res.product.size() == 1) {
    const auto& [tab, c] = *res.product.terms().begin();
    res.ok = tab == expected && abs(c) == 1;
  }
  return res;
}

}  // namespace sympf
