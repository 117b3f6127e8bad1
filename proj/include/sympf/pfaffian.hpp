#pragma once

#include <vector>

#include "sympf/index.hpp"
#include "sympf/matrix.hpp"
#include "sympf/poly.hpp"
#include "sympf/tableau.hpp"

namespace sympf {

// Sorted, duplicate-free subset of levels {1..r}.
using LevelSet = std::vector<int>;

// sign * [i_1, ..., i_2l] with indices in increasing numeric order.
// sign == 0 denotes the zero bracket.
class PfBracket {
 public:
  PfBracket() = default;  // the empty bracket, value 1
  PfBracket(int sign, std::vector<Index> indices);
  static PfBracket zero() { return PfBracket(0, {}); }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const std::vector<Index>& indices() const { return indices_; }

  friend bool operator==(const PfBracket&, const PfBracket&) = default;

 private:
  int sign_ = 1;
  std::vector<Index> indices_;
};

// Throws UsageError on odd length.
PfBracket normalize_pf(const std::vector<Index>& indices);
// γ_1, γ̄_1, ..., then P∖Γ ascending, then (Q∖Γ)‾ ascending, where Γ = P ∩ Q.
std::vector<Index> pq_sequence(const LevelSet& P, const LevelSet& Q);
PfBracket pf_bracket_pq(const LevelSet& P, const LevelSet& Q);

Poly pf_to_polynomial(const PfBracket& b, int n);
// Product of row pfaffians; rows are read in their stored order.
Poly tableau_to_polynomial(const Tableau& t, int r);

// Pf of a skew matrix of even size.
Rational pfaffian_value(const Matrix& a);
// Pf of the principal submatrix of y picked out by `seq`, in that order.
Rational evaluate_bracket(const std::vector<Index>& seq, const Matrix& y);
Rational evaluate_tableau(const Tableau& t, const Matrix& y);

void check_level_set(const LevelSet& s, int r);

}  // namespace sympf
