#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sympf/matrix.hpp"

namespace sympf {

struct RelationFailure {
  std::string family;
  std::string instance;
  std::string residual;  // "a/b", or a short description for non-scalar checks
};

struct RelationReport {
  std::map<std::string, std::size_t> checks;  // family -> instances evaluated
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
  std::size_t total_checks() const;
};

struct RelationBudget {
  // Largest wedge power / half bracket size examined; 0 means r.
  int max_degree = 0;
};

// Families:
//   point       skew, YᵀJY = 0, char poly of -JY = T^n
//   trace       2 Σ_h Y_{h,h̄} = 0, and phi(w, 1) equals it
//   sum         Σ_{Γ_t} [P'∪Γ_t, (Q'∪Γ_t)‾] = 0 over all P', Q', t >= 1
//   symplectic  [P'∪Γ, (Q'∪Γ)‾] = (-1)^{|Γ|} Σ_{Γ'} [P'∪Γ', (Q'∪Γ')‾]
//   oversized   [P, Q̄] = 0 when |P| + |Q| > r
//   power       w^m = 2^m m! Σ [P, Q̄] e^{P,Q̄}
//   contraction phi(w^m, t) = 0 for 1 <= t <= m
RelationReport verify_point_relations(const Matrix& y, const RelationBudget& budget = {});

}  // namespace sympf
