#include "sympf/pfaffian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

#include "sympf/errors.hpp"

namespace sympf {

PfBracket::PfBracket(int sign, std::vector<Index> indices) : sign_(sign), indices_(std::move(indices)) {
  if (sign_ == 0) indices_.clear();
  if (indices_.size() % 2 != 0) throw UsageError("pfaffian bracket of odd length");
}

PfBracket normalize_pf(const std::vector<Index>& indices) {
  if (indices.size() % 2 != 0) throw UsageError("normalize_pf: odd number of indices");
  std::vector<Index> v = indices;
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && compare_numeric(v[j], v[j - 1]) < 0; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return PfBracket::zero();
  return PfBracket(sign, std::move(v));
}

void check_level_set(const LevelSet& s, int r) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > r) throw UsageError("level " + std::to_string(s[i]) + " outside 1.." + std::to_string(r));
    if (i > 0 && s[i] <= s[i - 1]) throw UsageError("level set must be strictly increasing");
  }
}

std::vector<Index> pq_sequence(const LevelSet& P, const LevelSet& Q) {
  check_level_set(P, std::numeric_limits<int>::max());
  check_level_set(Q, std::numeric_limits<int>::max());
  std::vector<Index> seq;
  for (int g : P)
    if (std::binary_search(Q.begin(), Q.end(), g)) {
      seq.push_back(Index::plain(g));
      seq.push_back(Index::bar(g));
    }
  for (int p : P)
    if (!std::binary_search(Q.begin(), Q.end(), p)) seq.push_back(Index::plain(p));
  for (int q : Q)
    if (!std::binary_search(P.begin(), P.end(), q)) seq.push_back(Index::bar(q));
  return seq;
}

PfBracket pf_bracket_pq(const LevelSet& P, const LevelSet& Q) {
  if ((P.size() + Q.size()) % 2 != 0) throw UsageError("pf_bracket_pq: |P| + |Q| must be even");
  return normalize_pf(pq_sequence(P, Q));
}

namespace {

// Sum over perfect matchings (σ(1)<σ(2), ..., σ(1)<σ(3)<...) with the sign of σ.
void expand_matchings(const std::vector<int>& pos, std::vector<int>& sigma, std::vector<bool>& used,
                      const std::function<void(const std::vector<int>&)>& emit) {
  auto first = std::find(used.begin(), used.end(), false);
  if (first == used.end()) {
    emit(sigma);
    return;
  }
  std::size_t a = first - used.begin();
  used[a] = true;
  for (std::size_t b = a + 1; b < pos.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    sigma.push_back(static_cast<int>(a));
    sigma.push_back(static_cast<int>(b));
    expand_matchings(pos, sigma, used, emit);
    sigma.pop_back();
    sigma.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

int permutation_sign(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

Poly pf_to_polynomial(const PfBracket& b, int n) {
  Poly out(n);
  if (b.is_zero()) return out;
  const int r = n / 2;
  std::vector<int> pos;
  for (Index x : b.indices()) {
    if (!x.valid_for(r)) throw UsageError("bracket index " + x.to_string() + " outside n=" + std::to_string(n));
    pos.push_back(x.position(r));
  }
  const int nv = variable_count(n);
  std::vector<int> sigma;
  std::vector<bool> used(pos.size(), false);
  expand_matchings(pos, sigma, used, [&](const std::vector<int>& s) {
    Monomial m(nv);
    int sign = permutation_sign(s) * b.sign();
    for (std::size_t k = 0; k < s.size(); k += 2) {
      int i = pos[s[k]], j = pos[s[k + 1]];
      if (i > j) {
        std::swap(i, j);
        sign = -sign;
      }
      m = m * Monomial::variable(nv, variable_index(i, j, n));
    }
    out.add_term(m, sign);
  });
  return out;
}

Poly tableau_to_polynomial(const Tableau& t, int r) {
  const int n = 2 * r;
  Poly out = Poly::constant(n, 1);
  for (const auto& row : t.rows()) {
    if (row.size() % 2 != 0) throw UsageError("tableau_to_polynomial: odd-sized row in " + t.to_string());
    out = out * pf_to_polynomial(normalize_pf(row), n);
  }
  return out;
}

Rational pfaffian_value(const Matrix& a) {
  if (!a.is_square() || a.rows() % 2 != 0) throw UsageError("pfaffian of a matrix with odd or non-square size");
  if (!a.is_skew()) throw UsageError("pfaffian of a non-skew matrix");
  const int k = static_cast<int>(a.rows());
  if (k > 30) throw UsageError("pfaffian_value: matrix too large");
  // Expansion along the first remaining row, memoized on the remaining set.
  std::unordered_map<std::uint32_t, Rational> memo;
  std::function<Rational(std::uint32_t)> pf = [&](std::uint32_t mask) -> Rational {
    if (mask == 0) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    int i = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << i);
    Rational total = 0;
    int sign = 1;
    for (int j = i + 1; j < k; ++j) {
      if (!(rest & (1u << j))) continue;
      if (sgn(a(i, j)) != 0) total += sign * a(i, j) * pf(rest & ~(1u << j));
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return pf(k == 32 ? ~0u : ((1u << k) - 1));
}

Rational evaluate_bracket(const std::vector<Index>& seq, const Matrix& y) {
  if (!y.is_square() || y.rows() % 2 != 0) throw UsageError("evaluate_bracket: point must be n x n with n even");
  const int r = static_cast<int>(y.rows() / 2);
  std::vector<int> ids;
  for (Index x : seq) {
    if (!x.valid_for(r)) throw UsageError("bracket index " + x.to_string() + " outside r=" + std::to_string(r));
    ids.push_back(x.position(r) - 1);
  }
  return pfaffian_value(y.submatrix(ids, ids));
}

Rational evaluate_tableau(const Tableau& t, const Matrix& y) {
  Rational v = 1;
  for (const auto& row : t.rows()) {
    v *= evaluate_bracket(row, y);
    if (sgn(v) == 0) break;
  }
  return v;
}

}  // namespace sympf
