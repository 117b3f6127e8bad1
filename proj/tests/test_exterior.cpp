#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "sympf/errors.hpp"
#include "sympf/exterior.hpp"
#include "sympf/pfaffian.hpp"
#include "sympf/points.hpp"

using namespace sympf;

namespace {

Index I(int s) { return Index::from_signed(s); }

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::vector<Index> mask_indices(ExtVector::Mask m, int n) {
  std::vector<Index> out;
  for (int p = 1; p <= n; ++p)
    if (m & (ExtVector::Mask{1} << (p - 1))) out.push_back(Index::from_position(p, n / 2));
  return out;
}

// Contraction by summing over every admissible permutation.
ExtVector brute_phi(const ExtVector& v, int t) {
  const int n = v.n();
  ExtVector out(n);
  for (const auto& [mask, c] : v.terms()) {
    const auto x = mask_indices(mask, n);
    const int k = static_cast<int>(x.size());
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < t && ok; ++i) ok = s[2 * i] < s[2 * i + 1];
      for (int i = 2 * t + 1; i < k && ok; ++i) ok = s[i - 1] < s[i];
      if (!ok) continue;
      Rational coeff = c * perm_sign(s);
      for (int i = 0; i < t; ++i) coeff *= form(x[s[2 * i]], x[s[2 * i + 1]]);
      if (sgn(coeff) == 0) continue;
      std::vector<Index> rest;
      for (int i = 2 * t; i < k; ++i) rest.push_back(x[s[i]]);
      out += coeff * ExtVector::wedge_of(n, rest);
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return out;
}

std::vector<LevelSet> subsets(int r) {
  std::vector<LevelSet> out;
  for (int m = 0; m < (1 << r); ++m) {
    LevelSet s;
    for (int i = 0; i < r; ++i)
      if (m & (1 << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

LevelSet minus(const LevelSet& a, const LevelSet& b) {
  LevelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ExtVector random_vector(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  ExtVector v(n);
  for (ExtVector::Mask m = 0; m < (ExtVector::Mask{1} << n); ++m)
    if (std::popcount(m) == k && rng() % 3 == 0) v.add_term(m, coef(rng));
  return v;
}

}  // namespace

TEST_CASE("form") {
  CHECK(form(I(1), I(-1)) == 1);
  CHECK(form(I(-1), I(1)) == -1);
  CHECK(form(I(1), I(2)) == 0);
  CHECK(form(I(1), I(-2)) == 0);
  CHECK(form(I(-2), I(-2)) == 0);
}

TEST_CASE("wedge") {
  const int n = 4;
  const auto e1 = ExtVector::basis(n, I(1)), e2 = ExtVector::basis(n, I(2));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e2, e1) == Rational(-1) * wedge(e1, e2));
  CHECK(wedge(e1, e2) == ExtVector::wedge_of(n, {I(1), I(2)}));
  CHECK(wedge(e1, e2).terms().begin()->second == 1);
  CHECK(wedge(ExtVector::scalar(n, 3), e1) == Rational(3) * e1);
}

TEST_CASE("e_PQ") {
  const int r = 5, n = 10;
  CHECK(e_pq({1, 2, 5}, {2, 3, 4}, r) == ExtVector::wedge_of(n, {I(2), I(-2), I(1), I(5), I(-3), I(-4)}));
  CHECK(e_pq({1, 2, 5}, {2, 3, 4}, r) ==
        Rational(-1) * ExtVector::wedge_of(n, {I(1), I(2), I(5), I(-2), I(-3), I(-4)}));
  CHECK(e_pq({1}, {}, 2) == ExtVector::basis(4, I(1)));
  CHECK(e_pq({1}, {1}, 2) == ExtVector::wedge_of(4, {I(1), I(-1)}));
}

TEST_CASE("phi examples") {
  const int n = 4;
  CHECK(phi(ExtVector::wedge_of(n, {I(1), I(-1)}), 1) == ExtVector::scalar(n, 1));
  CHECK(phi(ExtVector::wedge_of(n, {I(1), I(2)}), 1).is_zero());
  CHECK(phi(e_pq({1, 2}, {1, 2}, 2), 1) == e_pq({2}, {2}, 2) + e_pq({1}, {1}, 2));
  CHECK_THROWS_AS(phi(ExtVector::basis(n, I(1)), 1), UsageError);
}

TEST_CASE("phi matches the permutation-sum definition and the iterated form") {
  std::mt19937_64 rng(9);
  for (int n : {4, 6})
    for (int k = 2; k <= 6; ++k)
      for (int t = 1; 2 * t <= k; ++t)
        for (int trial = 0; trial < 3; ++trial) {
          const ExtVector v = random_vector(n, k, rng);
          const ExtVector p = phi(v, t);
          CHECK(p == brute_phi(v, t));
          CHECK(p == phi_iterated(v, t));
        }
}

TEST_CASE("contraction of e_PQ, exhaustive for r <= 3") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& P : subsets(r))
      for (const auto& Q : subsets(r)) {
        const int k = static_cast<int>(P.size() + Q.size());
        if (k > 6) continue;
        LevelSet G;
        std::set_intersection(P.begin(), P.end(), Q.begin(), Q.end(), std::back_inserter(G));
        for (int t = 1; 2 * t <= k; ++t) {
          const ExtVector lhs = phi(e_pq(P, Q, r), t);
          if (t > static_cast<int>(G.size())) {
            CHECK(lhs.is_zero());
            continue;
          }
          ExtVector rhs(2 * r);
          for (const auto& g : subsets(static_cast<int>(G.size()))) {
            if (static_cast<int>(g.size()) != t) continue;
            LevelSet gt;
            for (int i : g) gt.push_back(G[i - 1]);
            rhs += e_pq(minus(P, gt), minus(Q, gt), r);
          }
          CHECK(lhs == factorial(t) * rhs);
        }
      }
}

TEST_CASE("w vector") {
  const int n = 4;
  Matrix y(n, n);
  CHECK(w_vector(y).is_zero());
  y(2, 3) = 5;
  y(3, 2) = -5;
  CHECK(w_vector(y) == Rational(10) * ExtVector::wedge_of(n, {I(-1), I(-2)}));
}

TEST_CASE("powers of w expand into pfaffians at sampled points") {
  for (int n : {4, 6}) {
    const int r = n / 2;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Matrix y = sample_point(n, seed).matrix();
      const ExtVector w = w_vector(y);
      for (int m = 0; m <= r; ++m) {
        ExtVector rhs(n);
        for (const auto& P : subsets(r))
          for (const auto& Q : subsets(r)) {
            if (static_cast<int>(P.size() + Q.size()) != 2 * m) continue;
            std::vector<Index> s;
            for (int p : P) s.push_back(Index::plain(p));
            for (int q : Q) s.push_back(Index::bar(q));
            rhs += evaluate_bracket(s, y) * ExtVector::wedge_of(n, s);
          }
        Rational scale = factorial(m);
        for (int i = 0; i < m; ++i) scale *= 2;
        CHECK(wedge_power(w, m) == scale * rhs);
      }
    }
  }
}

TEST_CASE("contraction vanishing at points") {
  const int n = 4;
  Matrix y(n, n);
  y(2, 3) = 1;
  y(3, 2) = -1;
  CHECK(check_contraction_vanishing(y, 1, 1).vanishes);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix s = sample_point(6, seed).matrix();
    for (int m = 1; m <= 3; ++m)
      for (int t = 1; t <= m; ++t) CHECK(check_contraction_vanishing(s, m, t).vanishes);
  }
  CHECK_THROWS_AS(check_contraction_vanishing(y, 1, 0), UsageError);
  CHECK_THROWS_AS(check_contraction_vanishing(y, 3, 1), UsageError);
  Matrix bad(n, n);
  bad(0, 2) = 1;
  bad(2, 0) = -1;
  const auto c = check_contraction_vanishing(bad, 1, 1);
  CHECK_FALSE(c.vanishes);
  CHECK_FALSE(c.failed_condition.empty());
  CHECK(phi(w_vector(bad), 1) == ExtVector::scalar(n, 2));
}
