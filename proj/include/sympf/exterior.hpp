#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympf/index.hpp"
#include "sympf/matrix.hpp"
#include "sympf/pfaffian.hpp"

namespace sympf {

// Element of the exterior algebra on e_1..e_n. Bit p-1 of a key stands for
// the basis vector at matrix position p; keys are read in increasing position.
class ExtVector {
 public:
  using Mask = std::uint32_t;

  explicit ExtVector(int n = 0);
  static ExtVector scalar(int n, const Rational& c);
  static ExtVector basis(int n, Index x);
  // e_{x_1} ∧ ... ∧ e_{x_k} in the given order (sign folded in).
  static ExtVector wedge_of(int n, const std::vector<Index>& seq);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  std::optional<int> homogeneous_degree() const;  // 0 for the zero vector
  void add_term(Mask m, const Rational& c);
  std::string to_string() const;

  ExtVector& operator+=(const ExtVector& o);
  ExtVector& operator-=(const ExtVector& o);
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
  friend ExtVector operator*(const Rational& c, const ExtVector& v);
  friend bool operator==(const ExtVector&, const ExtVector&) = default;

 private:
  int n_;
  std::map<Mask, Rational> terms_;
};

// ⟨e_a, e_b⟩ given by J.
int form(Index a, Index b);
int form_positions(int p, int q, int r);

ExtVector wedge(const ExtVector& u, const ExtVector& v);
ExtVector wedge_power(const ExtVector& v, int m);
ExtVector e_pq(const LevelSet& P, const LevelSet& Q, int r);

// Direct definition: sum over ordered choices of t disjoint pairs.
ExtVector phi(const ExtVector& v, int t);
// t-fold composition of phi(·, 1).
ExtVector phi_iterated(const ExtVector& v, int t);

// w = Σ_{i,j} Y_ij e_i ∧ e_j = 2 Σ_{i<j} Y_ij e_i ∧ e_j.
ExtVector w_vector(const Matrix& y);

struct ContractionCheck {
  bool vanishes = false;
  std::string failed_condition;  // names the defining equation of V that fails, if any
};

// Checks phi(w^m, t) == 0 for t <= m <= r.
ContractionCheck check_contraction_vanishing(const Matrix& y, int m, int t);

}  // namespace sympf
