#include "sympf/symplectic.hpp"

#include <functional>
#include <map>

#include "sympf/errors.hpp"

namespace sympf {

void validate_generator(const Generator& g, int r) {
  auto in_range = [r](int x) { return x >= 1 && x <= r; };
  if (!in_range(g.i)) throw UsageError("generator level i outside 1..r");
  if (g.kind == GeneratorKind::Shear) return;
  if (!in_range(g.j)) throw UsageError("generator level j outside 1..r");
  if (g.i == g.j) throw UsageError("generator needs i != j");
}

Matrix generator_matrix(const Generator& g, int r, const Rational& mu) {
  validate_generator(g, r);
  Matrix m = Matrix::identity(2 * r);
  const int i = g.i - 1, j = g.j - 1, ib = r + g.i - 1, jb = r + g.j - 1;
  switch (g.kind) {
    case GeneratorKind::Elementary:
      m(i, j) -= mu;
      m(jb, ib) += mu;
      break;
    case GeneratorKind::Shear:
      m(ib, i) += mu;
      break;
    case GeneratorKind::PairShear:
      m(jb, i) += mu;
      m(ib, j) += mu;
      break;
  }
  return m;
}

std::vector<MuBracketTerm> apply_symplectic_generator(const Generator& g, const PfBracket& b, int r) {
  validate_generator(g, r);
  // Column c of g as (row, coefficient, μ-power) triples; μ is kept symbolic.
  struct Entry {
    Index row;
    int coeff;
    int power;
  };
  auto column = [&](Index c) {
    std::vector<Entry> col{{c, 1, 0}};
    const Index gi = Index::plain(g.i), gj = Index::plain(g.j);
    switch (g.kind) {
      case GeneratorKind::Elementary:
        if (c == gj) col.push_back({gi, -1, 1});
        if (c == gi.conjugate()) col.push_back({gj.conjugate(), 1, 1});
        break;
      case GeneratorKind::Shear:
        if (c == gi) col.push_back({gi.conjugate(), 1, 1});
        break;
      case GeneratorKind::PairShear:
        if (c == gi) col.push_back({gj.conjugate(), 1, 1});
        if (c == gj) col.push_back({gi.conjugate(), 1, 1});
        break;
    }
    return col;
  };

  std::map<std::vector<Index>, std::map<int, Rational>, std::less<>> acc;
  std::vector<std::vector<Entry>> cols;
  for (Index x : b.indices()) {
    if (!x.valid_for(r)) throw UsageError("bracket index outside n");
    cols.push_back(column(x));
  }
  if (!b.is_zero()) {
    std::vector<Index> seq(cols.size(), Index::plain(1));
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int coeff, int power) {
      if (k == cols.size()) {
        PfBracket nb = normalize_pf(seq);
        if (nb.is_zero()) return;
        acc[nb.indices()][power] += b.sign() * nb.sign() * coeff;
        return;
      }
      for (const Entry& e : cols[k]) {
        seq[k] = e.row;
        rec(k + 1, coeff * e.coeff, power + e.power);
      }
    };
    rec(0, 1, 0);
  }

  std::vector<MuBracketTerm> out;
  for (auto& [idx, by_power] : acc) {
    MuBracketTerm t{idx, {}};
    for (auto& [p, c] : by_power) {
      if (sgn(c) == 0) continue;
      if (t.mu_coefficients.size() <= static_cast<std::size_t>(p)) t.mu_coefficients.resize(p + 1);
      t.mu_coefficients[p] = c;
    }
    if (!t.mu_coefficients.empty()) out.push_back(std::move(t));
  }
  return out;
}

Rational evaluate_action(const std::vector<MuBracketTerm>& terms, const Matrix& y, const Rational& mu) {
  Rational total = 0;
  for (const auto& t : terms) {
    Rational c = 0, pw = 1;
    for (const auto& a : t.mu_coefficients) {
      c += a * pw;
      pw *= mu;
    }
    if (sgn(c) != 0) total += c * evaluate_bracket(t.indices, y);
  }
  return total;
}

bool is_symplectic(const Matrix& g) {
  if (!g.is_square() || g.rows() % 2 != 0) return false;
  Matrix j = symplectic_form(static_cast<int>(g.rows()));
  return g.transpose() * j * g == j;
}

}  // namespace sympf
