#include "sympf/relations.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

#include "sympf/errors.hpp"
#include "sympf/exterior.hpp"
#include "sympf/pfaffian.hpp"

namespace sympf {

std::size_t RelationReport::total_checks() const {
  std::size_t s = 0;
  for (const auto& [f, c] : checks) s += c;
  return s;
}

namespace {

std::string set_text(const LevelSet& s) {
  std::string t = "{";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + std::to_string(s[i]);
  return t + "}";
}

std::vector<LevelSet> all_subsets(const LevelSet& base) {
  std::vector<LevelSet> out;
  for (std::uint32_t mask = 0; mask < (1u << base.size()); ++mask) {
    LevelSet s;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask >> i & 1) s.push_back(base[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<LevelSet> subsets_of_size(const LevelSet& base, std::size_t k) {
  std::vector<LevelSet> out;
  for (auto& s : all_subsets(base))
    if (s.size() == k) out.push_back(std::move(s));
  return out;
}

LevelSet unite(const LevelSet& a, const LevelSet& b) {
  LevelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LevelSet complement(const LevelSet& a, int r) {
  LevelSet out;
  for (int p = 1; p <= r; ++p)
    if (!std::binary_search(a.begin(), a.end(), p)) out.push_back(p);
  return out;
}

class Checker {
 public:
  explicit Checker(RelationReport& rep) : rep_(rep) {}
  void scalar(const std::string& family, const Rational& residual, const std::function<std::string()>& instance) {
    ++rep_.checks[family];
    if (sgn(residual) != 0) rep_.failures.push_back({family, instance(), format_rational(residual)});
  }
  void boolean(const std::string& family, bool ok, const std::string& instance, const std::string& what) {
    ++rep_.checks[family];
    if (!ok) rep_.failures.push_back({family, instance, what});
  }

 private:
  RelationReport& rep_;
};

}  // namespace

RelationReport verify_point_relations(const Matrix& y, const RelationBudget& budget) {
  RelationReport rep;
  Checker check(rep);
  if (!y.is_square() || y.rows() < 4 || y.rows() % 2 != 0) {
    check.boolean("point", false, "shape", "matrix is not n x n with even n >= 4");
    return rep;
  }
  const int n = static_cast<int>(y.rows());
  const int r = n / 2;
  const int max_m = budget.max_degree > 0 ? std::min(budget.max_degree, r) : r;

  check.boolean("point", y.is_skew(), "Y + Y^T = 0", "not skew-symmetric");
  if (!y.is_skew()) return rep;  // pfaffians need a skew matrix
  Matrix j = symplectic_form(n);
  check.boolean("point", (y.transpose() * j * y).is_zero(), "Y^T J Y = 0", "nonzero");
  auto cp = characteristic_polynomial(Rational(-1) * (j * y));
  bool nilpotent = true;
  for (int k = 0; k < n; ++k) nilpotent = nilpotent && sgn(cp[k]) == 0;
  check.boolean("point", nilpotent, "char poly of -JY = T^n", "differs");

  Rational trace_sum = 0;
  for (int h = 0; h < r; ++h) trace_sum += y(h, r + h);
  check.scalar("trace", 2 * trace_sum, [] { return std::string("2 sum_h Y_{h,hbar}"); });
  ExtVector w = w_vector(y);
  ExtVector phi_w = phi(w, 1);
  Rational phi_scalar = phi_w.terms().count(0) ? phi_w.terms().at(0) : Rational(0);
  check.scalar("trace", phi_scalar - 2 * trace_sum,
               [] { return std::string("phi(w,1) - 2 sum_h Y_{h,hbar}"); });

  const LevelSet all = complement({}, r);
  const auto subsets = all_subsets(all);
  auto bracket = [&](const LevelSet& p, const LevelSet& q) { return evaluate_bracket(pq_sequence(p, q), y); };

  // Sums over Γ_t, all P', Q' with |P'| + |Q'| + 2t <= 2 max_m.
  for (const auto& pp : subsets)
    for (const auto& qp : subsets) {
      if ((pp.size() + qp.size()) % 2 != 0) continue;
      const LevelSet rest = complement(unite(pp, qp), r);
      for (std::size_t t = 1; pp.size() + qp.size() + 2 * t <= static_cast<std::size_t>(2 * max_m); ++t) {
        if (t > rest.size()) break;
        Rational sum = 0;
        for (const auto& g : subsets_of_size(rest, t)) sum += bracket(unite(pp, g), unite(qp, g));
        check.scalar("sum", sum, [&] { return "P'=" + set_text(pp) + " Q'=" + set_text(qp) + " t=" + std::to_string(t); });
      }
    }

  // Symplectic relation for every admissible (P', Q', Γ).
  for (const auto& pp : subsets)
    for (const auto& qp : subsets) {
      if ((pp.size() + qp.size()) % 2 != 0) continue;
      const LevelSet rest = complement(unite(pp, qp), r);
      for (const auto& gamma : all_subsets(rest)) {
        if (gamma.empty()) continue;
        if (pp.size() + qp.size() + 2 * gamma.size() > static_cast<std::size_t>(2 * max_m)) continue;
        Rational rhs = 0;
        const LevelSet free = complement(unite(unite(pp, qp), gamma), r);
        for (const auto& g2 : subsets_of_size(free, gamma.size())) rhs += bracket(unite(pp, g2), unite(qp, g2));
        if (gamma.size() % 2) rhs = -rhs;
        check.scalar("symplectic", bracket(unite(pp, gamma), unite(qp, gamma)) - rhs, [&] {
          return "P'=" + set_text(pp) + " Q'=" + set_text(qp) + " Gamma=" + set_text(gamma);
        });
      }
    }

  // Oversized brackets.
  for (const auto& p : subsets)
    for (const auto& q : subsets) {
      std::size_t k = p.size() + q.size();
      if (k % 2 != 0 || k <= static_cast<std::size_t>(r) || k > static_cast<std::size_t>(2 * max_m)) continue;
      check.scalar("oversized", bracket(p, q), [&] { return "P=" + set_text(p) + " Q=" + set_text(q); });
    }

  // Wedge powers of w and their contractions.
  ExtVector wm = ExtVector::scalar(n, 1);
  for (int m = 1; m <= max_m; ++m) {
    wm = wedge(wm, w);
    ExtVector expected(n);
    for (const auto& p : subsets)
      for (const auto& q : subsets) {
        if (p.size() + q.size() != static_cast<std::size_t>(2 * m)) continue;
        Rational v = bracket(p, q);
        if (sgn(v) != 0) expected += v * e_pq(p, q, r);
      }
    Rational scale = Rational(mpz_class(1) << m) * factorial(m);
    ExtVector diff = wm - scale * expected;
    check.boolean("power", diff.is_zero(), "m=" + std::to_string(m), diff.is_zero() ? "" : diff.to_string());
    for (int t = 1; t <= m; ++t) {
      ExtVector c = phi(wm, t);
      check.boolean("contraction", c.is_zero(), "m=" + std::to_string(m) + " t=" + std::to_string(t),
                    c.is_zero() ? "" : c.to_string());
    }
  }
  return rep;
}

}  // namespace sympf
