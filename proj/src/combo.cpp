#include "sympf/combo.hpp"

#include <algorithm>

#include "sympf/errors.hpp"
#include "sympf/pfaffian.hpp"

namespace sympf {

std::pair<int, Tableau> canonicalize_tableau(const Tableau& t, int r) {
  if (!t.valid_for(r)) throw UsageError("tableau " + t.to_string() + " has entries outside r=" + std::to_string(r));
  if (!t.is_even()) throw UsageError("tableau " + t.to_string() + " has an odd-sized row");
  int sign = 1;
  std::vector<Row> rows = t.rows();
  for (auto& row : rows) {
    sign *= sort_row_symp(row);
    if (sign == 0) return {0, Tableau()};
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return compare_rows(a, b) < 0; });
  return {sign, Tableau(std::move(rows))};
}

TabCombo::TabCombo(int r) : r_(r) {
  if (r < 1) throw UsageError("TabCombo needs r >= 1");
}

TabCombo TabCombo::single(const Tableau& t, int r, const Rational& c) {
  TabCombo out(r);
  out.add(t, c);
  return out;
}

Rational TabCombo::coefficient(const Tableau& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TabCombo::add(const Tableau& t, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [sign, canon] = canonicalize_tableau(t, r_);
  if (sign == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(canon), sign * c);
  if (!inserted) {
    it->second += sign * c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void TabCombo::add(const TabCombo& o, const Rational& scale) {
  if (o.r_ != r_) throw UsageError("combining tableau combinations for different r");
  if (sgn(scale) == 0) return;
  for (const auto& [t, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(t, scale * c);
    if (!inserted) {
      it->second += scale * c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
}

Rational TabCombo::take(const Tableau& canonical) {
  auto it = terms_.find(canonical);
  if (it == terms_.end()) return 0;
  Rational c = it->second;
  terms_.erase(it);
  return c;
}

Poly TabCombo::to_polynomial() const {
  Poly p(2 * r_);
  for (const auto& [t, c] : terms_) p += c * tableau_to_polynomial(t, r_);
  return p;
}

Rational TabCombo::evaluate(const Matrix& y) const {
  if (y.rows() != static_cast<std::size_t>(2 * r_)) throw UsageError("evaluate: point size does not match r");
  Rational v = 0;
  for (const auto& [t, c] : terms_) v += c * evaluate_tableau(t, y);
  return v;
}

bool TabCombo::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

std::string TabCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.get_str() + ")" + t.to_string();
  }
  return s;
}

}  // namespace sympf
