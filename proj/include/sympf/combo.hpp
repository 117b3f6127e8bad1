#pragma once

#include <map>
#include <string>
#include <utility>

#include "sympf/matrix.hpp"
#include "sympf/poly.hpp"
#include "sympf/tableau.hpp"

namespace sympf {

// Sorts every row under ≺ (sign returned, 0 on a repeated entry) and orders
// rows by compare_rows. Throws UsageError on odd rows or entries outside r.
std::pair<int, Tableau> canonicalize_tableau(const Tableau& t, int r);

// Formal linear combination of even tableaux, stored in canonical form.
class TabCombo {
 public:
  using Terms = std::map<Tableau, Rational>;

  explicit TabCombo(int r);
  static TabCombo single(const Tableau& t, int r, const Rational& c = 1);

  int r() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Tableau& canonical) const;

  void add(const Tableau& t, const Rational& c);
  void add(const TabCombo& o, const Rational& scale = 1);
  // Removes a canonical tableau and returns its coefficient.
  Rational take(const Tableau& canonical);

  Poly to_polynomial() const;
  Rational evaluate(const Matrix& y) const;
  bool has_integer_coefficients() const;
  std::string to_string() const;

  friend bool operator==(const TabCombo&, const TabCombo&) = default;

 private:
  int r_;
  Terms terms_;
};

}  // namespace sympf
