#include "sympf/poly.hpp"

#include <algorithm>
#include <functional>

#include "sympf/errors.hpp"

namespace sympf {

int variable_count(int n) { return n * (n - 1) / 2; }

int variable_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw UsageError("variable Y_ij needs 1 <= i < j <= n");
  int a = i - 1, b = j - 1;
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<int, int> variable_pair(int index, int n) {
  for (int i = 1; i < n; ++i) {
    int row_len = n - i;
    if (index < row_len) return {i, i + 1 + index};
    index -= row_len;
  }
  throw UsageError("variable index out of range");
}

Monomial Monomial::variable(int nvars, int index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.exps_.size() != exps_.size()) throw UsageError("monomials over different variable sets");
  Monomial m = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) m.exps_[k] = static_cast<std::uint16_t>(m.exps_[k] + o.exps_[k]);
  return m;
}

bool GrevlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (int k = a.nvars(); k-- > 0;) {
    if (a.exponent(k) != b.exponent(k)) return a.exponent(k) < b.exponent(k);
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<std::uint16_t> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars - 1) {
      e[v] = static_cast<std::uint16_t>(left);
      out.emplace_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[v] = static_cast<std::uint16_t>(x);
      rec(v + 1, left - x);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  p.add_term(Monomial(variable_count(n)), c);
  return p;
}

Poly Poly::y(int n, int i, int j) {
  Poly p(n);
  if (i == j) return p;
  if (i < j) {
    p.add_term(Monomial::variable(variable_count(n), variable_index(i, j, n)), 1);
  } else {
    p.add_term(Monomial::variable(variable_count(n), variable_index(j, i, n)), -1);
  }
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.nvars() != variable_count(n_)) throw UsageError("monomial does not match polynomial ring");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Rational Poly::evaluate(const Matrix& y) const {
  if (y.rows() != static_cast<std::size_t>(n_) || y.cols() != static_cast<std::size_t>(n_)) {
    throw UsageError("evaluate: point is " + std::to_string(y.rows()) + "x" + std::to_string(y.cols()) +
                     ", polynomial ring needs " + std::to_string(n_) + "x" + std::to_string(n_));
  }
  if (!y.is_skew()) throw UsageError("evaluate: point is not skew-symmetric");
  const int nv = variable_count(n_);
  std::vector<Rational> values(nv);
  for (int v = 0; v < nv; ++v) {
    auto [i, j] = variable_pair(v, n_);
    values[v] = y(i - 1, j - 1);
  }
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nv && sgn(t) != 0; ++v)
      for (int e = 0; e < m.exponent(v); ++e) t *= values[v];
    total += t;
  }
  return total;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const int nv = variable_count(n_);
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    std::string factors;
    for (int v = 0; v < nv; ++v) {
      if (m.exponent(v) == 0) continue;
      auto [i, j] = variable_pair(v, n_);
      if (!factors.empty()) factors += "*";
      factors += n_ <= 9 ? "Y" + std::to_string(i) + std::to_string(j)
                         : "Y[" + std::to_string(i) + "," + std::to_string(j) + "]";
      if (m.exponent(v) > 1) factors += "^" + std::to_string(m.exponent(v));
    }
    if (factors.empty()) {
      s += a.get_str();
    } else if (a == 1) {
      s += factors;
    } else {
      s += a.get_str() + "*" + factors;
    }
  }
  return s;
}

void Poly::require_same_n(const Poly& o) const {
  if (o.n_ != n_) throw UsageError("polynomials over different matrix sizes");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_n(b);
  Poly p(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

}  // namespace sympf
