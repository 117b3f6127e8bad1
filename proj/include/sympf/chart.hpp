#pragma once

#include <random>

#include "sympf/combo.hpp"
#include "sympf/matrix.hpp"
#include "sympf/points.hpp"
#include "sympf/poly.hpp"
#include "sympf/straighten.hpp"

namespace sympf {

// A symmetric r x r and C skew invertible r x r, r even.
struct ChartDatum {
  Matrix a;
  Matrix c;
  int r() const { return static_cast<int>(a.rows()); }
};

// Throws UsageError unless the invariants above hold.
void validate_chart_datum(const ChartDatum& d);

// N has row blocks [A 0], I_n, [C -A]; G is its bottom n rows and Y is the
// top n x n block of N G⁻¹.
PointV chart_point(const ChartDatum& d);
// tr(A C⁻¹).
Rational trace_identity_check(const ChartDatum& d);

// Determinant of the rows/columns r̄ block.
Rational f_minor(const Matrix& y);
Poly f_minor_generic(int n);

// Random A with entries in [-5,5]; C by rejection sampling on det(C) != 0.
ChartDatum random_chart_datum(int r, std::mt19937_64& rng);

// The row 1̄..r̄ times T; true when the product is that single tableau
// (the row prepended) with coefficient ±1.
struct NzdResult {
  bool ok = false;
  TabCombo product;
};
NzdResult nzd_closure_check(const Tableau& t, Straightener& s);

}  // namespace sympf
