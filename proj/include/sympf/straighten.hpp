#pragma once

#include <cstddef>
#include <optional>

#include "sympf/combo.hpp"
#include "sympf/pfaffian.hpp"
#include "sympf/plucker.hpp"
#include "sympf/tableau.hpp"

namespace sympf {

// A position (row, column), both 1-based, where an entry of level u < column
// sits, with the level sets read off that row.
struct SympViolation {
  int row = 0;
  int column = 0;
  LevelSet gamma;    // p with both p and p̄ among the first `column` entries
  LevelSet single;   // p with exactly one of them there
  LevelSet p_prime;  // unbarred levels of the row, minus gamma
  LevelSet q_prime;  // barred levels of the row, minus gamma
};

// Requires a standard tableau (UsageError otherwise). Picks the violation
// with the smallest column, then the smallest row.
std::optional<SympViolation> find_symp_violation(const Tableau& t, int r);

// (-1)^{|Γ|} Σ_{Γ'} [P'∪Γ', (Q'∪Γ')‾] over Γ' ⊆ {1..r}∖(P'∪Q'∪Γ), |Γ'| = |Γ|,
// each bracket stored as a ≺-sorted one-row tableau.
TabCombo symp_relation_rhs(const LevelSet& p_prime, const LevelSet& q_prime, const LevelSet& gamma, int r);

struct StraightenStats {
  std::size_t dcp_steps = 0;
  std::size_t symplectic_steps = 0;
};

// Holds the pair-expansion cache; reuse one instance to amortize work.
// Not thread-safe; use one per thread.
class Straightener {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  explicit Straightener(int r, std::size_t step_budget = kDefaultBudget);

  int r() const { return r_; }
  TabCombo dcp_straighten(const TabCombo& c);
  TabCombo symp_normal_form(const TabCombo& c);
  TabCombo multiply_basis(const Tableau& t1, const Tableau& t2);
  const StraightenStats& stats() const { return stats_; }
  std::size_t class_eliminations() const { return pairs_.class_eliminations(); }

 private:
  void charge_step();
  TabCombo rewrite_violation(const Tableau& t, const SympViolation& v);

  int r_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  StraightenStats stats_;
  PairStraightener pairs_;
};

TabCombo dcp_straighten(const TabCombo& c);
TabCombo symp_normal_form(const TabCombo& c);
TabCombo multiply_basis(const Tableau& t1, const Tableau& t2, int r);

}  // namespace sympf
