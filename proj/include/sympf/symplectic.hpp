#pragma once

#include <vector>

#include "sympf/matrix.hpp"
#include "sympf/pfaffian.hpp"

namespace sympf {

enum class GeneratorKind {
  Elementary,  // I - μE_{i,j} + μE_{j̄,ī}, i != j
  Shear,       // I + μE_{ī,i}
  PairShear,   // I + μE_{j̄,i} + μE_{ī,j}, i != j
};

struct Generator {
  GeneratorKind kind;
  int i;
  int j = 0;  // unused for Shear
};

void validate_generator(const Generator& g, int r);
Matrix generator_matrix(const Generator& g, int r, const Rational& mu);

// One term of g·[b] with coefficient Σ_k mu_coefficients[k] μ^k.
struct MuBracketTerm {
  std::vector<Index> indices;  // numeric order
  std::vector<Rational> mu_coefficients;
};

// g·f(Y) = f(gᵀYg) expanded multilinearly over the columns of g.
std::vector<MuBracketTerm> apply_symplectic_generator(const Generator& g, const PfBracket& b, int r);
Rational evaluate_action(const std::vector<MuBracketTerm>& terms, const Matrix& y, const Rational& mu);

bool is_symplectic(const Matrix& g);

}  // namespace sympf
