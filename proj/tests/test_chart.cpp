#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "sympf/chart.hpp"
#include "sympf/errors.hpp"
#include "sympf/pfaffian.hpp"
#include "sympf/points.hpp"

using namespace sympf;

namespace {

Matrix barred_block(const Matrix& y) {
  const int r = static_cast<int>(y.rows() / 2);
  std::vector<int> ids(r);
  std::iota(ids.begin(), ids.end(), r);
  return y.submatrix(ids, ids);
}

Matrix random_skew(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  Matrix a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      a(i, j) = d(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

}  // namespace

TEST_CASE("chart points from fixed data") {
  const Matrix c = Matrix::from_rows({{0, 1}, {-1, 0}});
  for (const Matrix& a : {Matrix::identity(2), Matrix(2, 2)}) {
    const PointV p = chart_point({a, c});
    CHECK(check_point(p.matrix()).ok);
    CHECK(f_minor(p.matrix()) != 0);
  }
}

TEST_CASE("chart datum validation") {
  const Matrix c = Matrix::from_rows({{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(validate_chart_datum({Matrix::from_rows({{0, 1}, {2, 0}}), c}), UsageError);
  CHECK_THROWS_AS(validate_chart_datum({Matrix::identity(2), Matrix(2, 2)}), UsageError);
  CHECK_THROWS_AS(validate_chart_datum({Matrix::identity(3), Matrix::identity(3)}), UsageError);
}

TEST_CASE("trace identity") {
  CHECK(trace_identity_check({Matrix::from_rows({{1, 2}, {2, 5}}), Matrix::from_rows({{0, 3}, {-3, 0}})}) == 0);
  CHECK(trace_identity_check({Matrix(2, 2), Matrix::from_rows({{0, 3}, {-3, 0}})}) == 0);
  std::mt19937_64 rng(3);
  for (int r : {2, 4})
    for (int k = 0; k < 20; ++k) CHECK(trace_identity_check(random_chart_datum(r, rng)) == 0);
}

TEST_CASE("random chart points") {
  std::mt19937_64 rng(8);
  for (int r : {2, 4})
    for (int k = 0; k < 20; ++k) {
      const PointV p = chart_point(random_chart_datum(r, rng));
      CHECK(check_point(p.matrix()).ok);
      CHECK(f_minor(p.matrix()) != 0);
    }
}

TEST_CASE("f-minor is the square of the pfaffian of the barred block") {
  const int n = 4;
  CHECK(f_minor_generic(n) == Poly::y(n, 3, 4) * Poly::y(n, 3, 4));
  std::mt19937_64 rng(1);
  for (int m : {4, 8}) {
    const Poly f = f_minor_generic(m);
    for (int k = 0; k < 5; ++k) {
      const Matrix y = random_skew(m, rng);
      const Rational pf = pfaffian_value(barred_block(y));
      CHECK(f_minor(y) == pf * pf);
      CHECK(f.evaluate(y) == pf * pf);
    }
    const Matrix s = sample_point(m, std::uint64_t{4}).matrix();
    const Rational pf = pfaffian_value(barred_block(s));
    CHECK(f_minor(s) == pf * pf);
  }
  CHECK(f_minor(block_point(Matrix(2, 2), Matrix::identity(4))) == 0);
}

TEST_CASE("multiplication by the barred row") {
  const int r = 2;
  Straightener s(r);
  auto res = nzd_closure_check(Tableau(), s);
  CHECK(res.ok);
  CHECK(res.product == TabCombo::single(Tableau::from_signed({{-1, -2}}), r));
  res = nzd_closure_check(Tableau::from_signed({{1, 2}}), s);
  CHECK(res.ok);
  CHECK(res.product == TabCombo::single(Tableau::from_signed({{-1, -2}, {1, 2}}), r));

  std::set<Tableau> images;
  std::size_t total = 0;
  for (int m = 0; m <= 3; ++m)
    for (const auto& t : symplectic_basis(m, r)) {
      const auto out = nzd_closure_check(t, s);
      CHECK(out.ok);
      if (out.product.size() == 1) images.insert(out.product.terms().begin()->first);
      ++total;
    }
  CHECK(images.size() == total);

  Straightener odd(3);
  CHECK_THROWS_AS(nzd_closure_check(Tableau(), odd), UsageError);
  CHECK_THROWS_AS(nzd_closure_check(Tableau::from_signed({{-1, 1}}), s), UsageError);
}
