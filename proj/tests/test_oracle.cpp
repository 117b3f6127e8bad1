#include <doctest.h>

#include "sympf/errors.hpp"
#include "sympf/oracle.hpp"
#include "sympf/pfaffian.hpp"
#include "sympf/points.hpp"
#include "sympf/relations.hpp"
#include "sympf/straighten.hpp"
#include "sympf/symplectic.hpp"

using namespace sympf;

namespace {

Poly bracket_poly(std::vector<int> signed_indices, int n) {
  std::vector<Index> s;
  for (int x : signed_indices) s.push_back(Index::from_signed(x));
  return pf_to_polynomial(normalize_pf(s), n);
}

// Substitute Y -> g^T Y g into p.
Poly substitute(const Poly& p, const Matrix& g) {
  const int n = p.n();
  // Entry (a,b) of g^T Y g is sum_{c,d} g(c,a) g(d,b) Y(c,d).
  std::vector<std::vector<Poly>> moved(n, std::vector<Poly>(n, Poly(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (c == d) continue;
          const Rational coeff = g(c, a) * g(d, b);
          if (sgn(coeff) != 0) moved[a][b] += coeff * Poly::y(n, c + 1, d + 1);
        }
  Poly out(n);
  for (const auto& [mono, c] : p.terms()) {
    Poly term = Poly::constant(n, c);
    for (int v = 0; v < mono.nvars(); ++v) {
      const auto [i, j] = variable_pair(v, n);
      for (int e = 0; e < mono.exponent(v); ++e) term = term * moved[i - 1][j - 1];
    }
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("ideal generators vanish at sampled points") {
  for (int n : {4, 6, 8}) {
    const auto gens = ideal_generators(n);
    CHECK_FALSE(gens.empty());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Matrix y = sample_point(n, seed).matrix();
      for (const auto& g : gens) CHECK(g.evaluate(y) == 0);
    }
  }
}

TEST_CASE("graded dimensions") {
  CHECK(graded_ideal_dimension(4, 0) == 1);
  CHECK(graded_ideal_dimension(4, 1) == 5);
  CHECK(graded_ideal_dimension(4, 2) == 14);
  CHECK(graded_ideal_dimension(4, 3) == count_symplectic_standard_even(3, 2));
  CHECK(graded_ideal_dimension(6, 2) == count_symplectic_standard_even(2, 3));
  CHECK(graded_ideal_dimension(4, 3, FieldSpec{101}) == 30);
  CHECK(graded_ideal_dimension(6, 2, FieldSpec{5}) == 90);
  CHECK_THROWS_AS(graded_ideal_dimension(4, 2, FieldSpec{2}), UsageError);
}

TEST_CASE("budget refusal") {
  IdealOracle o(8, {}, 1000);
  CHECK(o.size_estimate(3) > 1000);
  CHECK_THROWS_AS(o.dimension(3), BudgetExceeded);
}

TEST_CASE("normal forms modulo the ideal") {
  const int n = 4;
  Poly tr(n);
  tr += Poly::y(n, 1, 3);
  tr += Poly::y(n, 2, 4);
  CHECK(normal_form_modulo_ideal(tr, 1).is_zero());
  CHECK(normal_form_modulo_ideal(bracket_poly({1, -1}, n) + bracket_poly({2, -2}, n), 1).is_zero());
  CHECK_FALSE(normal_form_modulo_ideal(Poly::y(n, 1, 2), 1).is_zero());
  CHECK_THROWS_AS(normal_form_modulo_ideal(Poly::y(n, 1, 2) + Poly::constant(n, 1), 1), UsageError);

  IdealOracle o(n);
  const Poly a = Poly::y(n, 1, 2) * Poly::y(n, 1, 4), b = Poly::y(n, 2, 3) * Poly::y(n, 3, 4);
  CHECK(o.normal_form(a + b) == o.normal_form(a) + o.normal_form(b));
  CHECK(o.normal_form(Rational(5) * a) == Rational(5) * o.normal_form(a));
}

TEST_CASE("normal form of a tableau minus its straightened form lies in the ideal") {
  const int r = 2, n = 4;
  IdealOracle o(n);
  Straightener s(r);
  for (const auto& rows : std::vector<std::vector<std::vector<int>>>{
           {{1, -1}}, {{1, -1}, {1, -1}}, {{1, 2, -1, -2}}, {{2, 1}, {-2, -1}}, {{-1, 1}, {2, -2}, {1, 2}}}) {
    const auto t = Tableau::from_signed(rows);
    const auto in = TabCombo::single(t, r);
    const auto out = s.symp_normal_form(in);
    CHECK(o.in_ideal(in.to_polynomial() - out.to_polynomial()));
  }
}

TEST_CASE("the ideal is stable under the symplectic generators") {
  for (int n : {4, 6}) {
    const int r = n / 2;
    IdealOracle o(n);
    std::vector<Generator> gens;
    for (int i = 1; i <= r; ++i) {
      gens.push_back({GeneratorKind::Shear, i});
      for (int j = 1; j <= r; ++j)
        if (i != j) {
          gens.push_back({GeneratorKind::Elementary, i, j});
          gens.push_back({GeneratorKind::PairShear, i, j});
        }
    }
    for (const auto& g : gens) {
      const Matrix gm = generator_matrix(g, r, Rational(2));
      for (const auto& h : ideal_generators(n)) CHECK(o.in_ideal(substitute(h, gm)));
    }
  }
}

TEST_CASE("sampled points") {
  const int n = 4;
  const Matrix a = Matrix::from_rows({{0, 1}, {-1, 0}});
  const Matrix y = block_point(a, Matrix::identity(n));
  Matrix expect(n, n);
  expect(2, 3) = 1;
  expect(3, 2) = -1;
  CHECK(y == expect);
  CHECK(check_point(y).ok);
  CHECK(check_point(block_point(Matrix(2, 2), Matrix::identity(n))).ok);
  for (int m : {4, 6, 8})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix s = sample_point(m, seed).matrix();
      const auto c = check_point(s);
      CHECK(c.ok);
      // char poly of -JY must be T^n
      const auto cp = characteristic_polynomial(Rational(-1) * symplectic_form(m) * s);
      for (int k = 0; k < m; ++k) CHECK(cp[k] == 0);
      CHECK(cp[m] == 1);
    }
  CHECK(sample_point(6, std::uint64_t{7}).matrix() == sample_point(6, std::uint64_t{7}).matrix());
}

TEST_CASE("point relation report") {
  const int n = 4;
  const Matrix y = block_point(Matrix::from_rows({{0, 1}, {-1, 0}}), Matrix::identity(n));
  CHECK(verify_point_relations(y).ok());
  const auto rep6 = verify_point_relations(sample_point(6, std::uint64_t{3}).matrix());
  CHECK(rep6.ok());
  CHECK(rep6.total_checks() > 0);

  Matrix bad = sample_point(n, std::uint64_t{2}).matrix();
  bad(0, 2) += 1;
  bad(2, 0) -= 1;
  const auto rep = verify_point_relations(bad);
  CHECK_FALSE(rep.ok());
  bool trace_failed = false;
  for (const auto& f : rep.failures) trace_failed = trace_failed || f.family == "trace";
  CHECK(trace_failed);
  CHECK_THROWS_AS(PointV::from_matrix(bad), UsageError);
}
