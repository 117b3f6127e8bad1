#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "sympf/poly.hpp"
#include "sympf/scalar.hpp"

namespace sympf {

// Entries (a < b) of YᵀJY that are not identically zero, then Σ_i Y_{i,ī}.
std::vector<Poly> ideal_generators(int n);

// Degree-by-degree linear algebra on the ideal generated by ideal_generators(n).
// Caches one echelon form per degree. Not thread-safe.
class IdealOracle {
 public:
  static constexpr std::size_t kDefaultMaxEntries = 200'000'000;

  explicit IdealOracle(int n, FieldSpec field = {}, std::size_t max_entries = kDefaultMaxEntries);
  ~IdealOracle();
  IdealOracle(IdealOracle&&) noexcept;
  IdealOracle& operator=(IdealOracle&&) noexcept;

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  std::size_t monomial_count(int m) const;
  // Rows x columns of the degree-m coefficient matrix before elimination.
  std::size_t size_estimate(int m) const;
  // dim of the degree-m piece of the quotient.
  std::size_t dimension(int m);
  // Remainder supported on the monomials that are not leading terms of the
  // ideal's degree-m piece. Needs the rational field and a homogeneous input.
  Poly normal_form(const Poly& p);
  bool in_ideal(const Poly& p);

 private:
  struct Piece;
  Piece& piece(int m);

  int n_;
  FieldSpec field_;
  std::size_t max_entries_;
  std::map<int, std::unique_ptr<Piece>> pieces_;
};

std::size_t graded_ideal_dimension(int n, int m, const FieldSpec& field = {});
Poly normal_form_modulo_ideal(const Poly& p, int m);

}  // namespace sympf
