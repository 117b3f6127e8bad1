#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sympf/scalar.hpp"

namespace sympf {

// Internal row form: ≺-ranks (see Index::symp_rank), strictly increasing.
using RankRow = std::vector<int>;
// Product Pf(first)·Pf(second) with first ordered before second by
// compare_rows; second may be empty (a single pfaffian).
using RowPair = std::pair<RankRow, RankRow>;

// Sorts both rows (with sign, 0 on repeat) and orders the pair.
std::pair<int, RowPair> canonical_pair(RankRow x, RankRow y);
bool is_standard_pair(const RowPair& p);
// Colex comparison: each row keyed by (-length, entries descending), the
// pair by its sorted row keys.
bool colex_less(const RowPair& p, const RowPair& q);

// For odd-length sequences A and B:
//   Σ_i (-1)^{i-1} Pf(A∖a_i) Pf(a_i, B) - Σ_j (-1)^{j-1} Pf(A, b_j) Pf(B∖b_j) = 0.
// Returned merged over canonical pairs, zero coefficients dropped.
std::map<RowPair, Rational> quadratic_relation(const std::vector<int>& a, const std::vector<int>& b);

// Rewrites a product of two pfaffian rows as a combination of standard
// pairs. Results are memoized.
class PairStraightener {
 public:
  struct Term {
    Rational coeff;
    RowPair pair;
  };

  // `p` must be canonical.
  const std::vector<Term>& expand(const RowPair& p);
  std::size_t class_eliminations() const { return class_eliminations_; }

 private:
  void eliminate_class(const RowPair& p);

  std::map<RowPair, std::vector<Term>> memo_;
  std::size_t class_eliminations_ = 0;
};

}  // namespace sympf
