#include "sympf/exterior.hpp"

#include <bit>
#include <functional>

#include "sympf/errors.hpp"
#include "sympf/points.hpp"

namespace sympf {

namespace {

using Mask = ExtVector::Mask;

// Sign of moving the vectors of b past those of a to get sorted order.
int merge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    int p = std::countr_zero(bb);
    swaps += std::popcount(a >> (p + 1));
  }
  return swaps % 2 ? -1 : 1;
}

void check_n(int n) {
  if (n < 0 || n > 32 || n % 2 != 0) throw UsageError("exterior algebra needs even n <= 32");
}

}  // namespace

ExtVector::ExtVector(int n) : n_(n) { check_n(n); }

ExtVector ExtVector::scalar(int n, const Rational& c) {
  ExtVector v(n);
  v.add_term(0, c);
  return v;
}

ExtVector ExtVector::basis(int n, Index x) { return wedge_of(n, {x}); }

ExtVector ExtVector::wedge_of(int n, const std::vector<Index>& seq) {
  ExtVector v = scalar(n, 1);
  const int r = n / 2;
  for (Index x : seq) {
    if (!x.valid_for(r)) throw UsageError("basis index outside n");
    ExtVector e(n);
    e.add_term(Mask{1} << (x.position(r) - 1), 1);
    v = wedge(v, e);
  }
  return v;
}

std::optional<int> ExtVector::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != d) return std::nullopt;
  return d;
}

void ExtVector::add_term(Mask m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (n_ < 32 && (m >> n_) != 0) throw UsageError("basis monomial outside n");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::string ExtVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.get_str() + ")";
    for (Mask mm = m; mm; mm &= mm - 1) s += " e" + std::to_string(std::countr_zero(mm) + 1);
  }
  return s;
}

ExtVector& ExtVector::operator+=(const ExtVector& o) {
  if (o.n_ != n_) throw UsageError("exterior vectors over different n");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtVector& ExtVector::operator-=(const ExtVector& o) {
  if (o.n_ != n_) throw UsageError("exterior vectors over different n");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExtVector operator*(const Rational& c, const ExtVector& v) {
  ExtVector out(v.n_);
  for (const auto& [m, x] : v.terms_) out.add_term(m, c * x);
  return out;
}

int form_positions(int p, int q, int r) {
  if (q == p + r && p <= r) return 1;
  if (p == q + r && q <= r) return -1;
  return 0;
}

int form(Index a, Index b) {
  if (a.level() != b.level() || a.is_barred() == b.is_barred()) return 0;
  return a.is_barred() ? -1 : 1;
}

ExtVector wedge(const ExtVector& u, const ExtVector& v) {
  if (u.n() != v.n()) throw UsageError("wedge of vectors over different n");
  ExtVector out(u.n());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      if (a & b) continue;
      out.add_term(a | b, merge_sign(a, b) * ca * cb);
    }
  return out;
}

ExtVector wedge_power(const ExtVector& v, int m) {
  if (m < 0) throw UsageError("negative wedge power");
  ExtVector out = ExtVector::scalar(v.n(), 1);
  for (int k = 0; k < m; ++k) out = wedge(out, v);
  return out;
}

ExtVector e_pq(const LevelSet& P, const LevelSet& Q, int r) {
  check_level_set(P, r);
  check_level_set(Q, r);
  return ExtVector::wedge_of(2 * r, pq_sequence(P, Q));
}

ExtVector phi(const ExtVector& v, int t) {
  if (t < 0) throw UsageError("phi: t must be non-negative");
  auto deg = v.homogeneous_degree();
  if (!deg) throw UsageError("phi: input is not homogeneous");
  ExtVector out(v.n());
  if (v.is_zero()) return out;
  if (*deg < 2 * t) throw UsageError("phi: degree " + std::to_string(*deg) + " < 2t = " + std::to_string(2 * t));
  const int r = v.n() / 2;
  for (const auto& [mask, coeff] : v.terms()) {
    std::vector<int> pos;  // 1-based positions v_1 < ... < v_k
    for (Mask mm = mask; mm; mm &= mm - 1) pos.push_back(std::countr_zero(mm) + 1);
    const int k = static_cast<int>(pos.size());
    std::vector<int> sigma;  // list slots, pairs first
    std::vector<bool> used(k, false);
    std::function<void(int, Rational)> rec = [&](int pairs, Rational value) {
      if (pairs == t) {
        std::vector<int> full = sigma;
        Mask rest = 0;
        for (int s = 0; s < k; ++s)
          if (!used[s]) {
            full.push_back(s);
            rest |= Mask{1} << (pos[s] - 1);
          }
        int inv = 0;
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (full[a] > full[b]) ++inv;
        out.add_term(rest, (inv % 2 ? -1 : 1) * value);
        return;
      }
      for (int a = 0; a < k; ++a) {
        if (used[a]) continue;
        for (int b = a + 1; b < k; ++b) {
          if (used[b]) continue;
          int f = form_positions(pos[a], pos[b], r);
          if (f == 0) continue;
          used[a] = used[b] = true;
          sigma.push_back(a);
          sigma.push_back(b);
          rec(pairs + 1, value * f);
          sigma.pop_back();
          sigma.pop_back();
          used[a] = used[b] = false;
        }
      }
    };
    rec(0, coeff);
  }
  return out;
}

ExtVector phi_iterated(const ExtVector& v, int t) {
  ExtVector out = v;
  for (int s = 0; s < t; ++s) out = phi(out, 1);
  return out;
}

ExtVector w_vector(const Matrix& y) {
  if (!y.is_square() || y.rows() % 2 != 0) throw UsageError("w_vector: point must be n x n with n even");
  const int n = static_cast<int>(y.rows());
  ExtVector w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mask m = (Mask{1} << i) | (Mask{1} << j);
      w.add_term(m, (i < j ? 1 : -1) * y(i, j));
    }
  return w;
}

ContractionCheck check_contraction_vanishing(const Matrix& y, int m, int t) {
  PointCheck pc = check_point(y);
  if (!pc.ok) return {false, pc.failure};
  const int r = static_cast<int>(y.rows() / 2);
  if (!(1 <= t && t <= m && m <= r)) throw UsageError("contraction check needs 1 <= t <= m <= r");
  return {phi(wedge_power(w_vector(y), m), t).is_zero(), {}};
}

}  // namespace sympf
