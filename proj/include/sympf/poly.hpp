#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympf/matrix.hpp"
#include "sympf/scalar.hpp"

namespace sympf {

// Variables Y_ij (1 <= i < j <= n) are numbered in (i, j)-lexicographic order.
int variable_count(int n);
int variable_index(int i, int j, int n);
std::pair<int, int> variable_pair(int index, int n);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(int nvars, int index);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  std::uint16_t exponent(int v) const { return exps_[v]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint16_t> exps_;
};

// Graded reverse-lexicographic: a "greater than" b.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of a given degree, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// Sparse polynomial over Q in the variables Y_ij, i < j, of an n x n skew matrix.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Poly(int n = 0) : n_(n) {}
  static Poly constant(int n, const Rational& c);
  // Y_ij with skew-symmetry applied: Y_ji = -Y_ij, Y_ii = 0. Positions 1-based.
  static Poly y(int n, int i, int j);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rational& c);
  std::optional<int> homogeneous_degree() const;  // nullopt if mixed; 0 for the zero poly
  Rational evaluate(const Matrix& y) const;
  std::string to_string() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  void require_same_n(const Poly& o) const;
  int n_;
  Terms terms_;
};

}  // namespace sympf
