#include "sympf/plucker.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "sympf/linalg.hpp"

namespace sympf {

namespace {

int sort_with_sign(RankRow& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

bool row_before(const RankRow& a, const RankRow& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

// (-length, entries descending); smaller key = earlier in colex.
std::pair<int, RankRow> row_key(const RankRow& r) {
  return {-static_cast<int>(r.size()), RankRow(r.rbegin(), r.rend())};
}

std::string pair_text(const RowPair& p) {
  std::string s = "(";
  for (int x : p.first) s += std::to_string(x) + " ";
  s += "| ";
  for (int x : p.second) s += std::to_string(x) + " ";
  return s + ")";
}

}  // namespace

std::pair<int, RowPair> canonical_pair(RankRow x, RankRow y) {
  int sign = sort_with_sign(x) * sort_with_sign(y);
  if (sign == 0) return {0, {}};
  if (row_before(y, x)) std::swap(x, y);
  return {sign, {std::move(x), std::move(y)}};
}

bool is_standard_pair(const RowPair& p) {
  const auto& [a, b] = p;
  if (b.size() > a.size()) return false;
  for (std::size_t c = 0; c < b.size(); ++c)
    if (b[c] < a[c]) return false;
  return true;
}

bool colex_less(const RowPair& p, const RowPair& q) {
  auto keys = [](const RowPair& x) {
    std::vector<std::pair<int, RankRow>> k;
    if (!x.first.empty()) k.push_back(row_key(x.first));
    if (!x.second.empty()) k.push_back(row_key(x.second));
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(p) < keys(q);
}

std::map<RowPair, Rational> quadratic_relation(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() % 2 == 0 || b.size() % 2 == 0) throw std::invalid_argument("quadratic_relation needs odd lengths");
  std::map<RowPair, Rational> rel;
  auto add = [&](int coeff, RankRow x, RankRow y) {
    auto [sign, p] = canonical_pair(std::move(x), std::move(y));
    if (sign == 0) return;
    auto& c = rel[p];
    c += coeff * sign;
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    RankRow rest, with{a[i]};
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != i) rest.push_back(a[k]);
    with.insert(with.end(), b.begin(), b.end());
    add(i % 2 ? -1 : 1, std::move(rest), std::move(with));
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    RankRow with = a, rest;
    with.push_back(b[j]);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (k != j) rest.push_back(b[k]);
    add(j % 2 ? 1 : -1, std::move(with), std::move(rest));
  }
  for (auto it = rel.begin(); it != rel.end();) it = sgn(it->second) == 0 ? rel.erase(it) : std::next(it);
  return rel;
}

const std::vector<PairStraightener::Term>& PairStraightener::expand(const RowPair& p) {
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;
  if (is_standard_pair(p)) return memo_[p] = {Term{1, p}};

  const auto& [a, b] = p;
  std::vector<std::pair<RankRow, RankRow>> candidates;
  for (int x : b)
    if (!std::binary_search(a.begin(), a.end(), x)) {
      RankRow big{x}, small;
      big.insert(big.end(), a.begin(), a.end());
      for (int y : b)
        if (y != x) small.push_back(y);
      candidates.emplace_back(std::move(big), std::move(small));
    }
  for (int y : a)
    if (!std::binary_search(b.begin(), b.end(), y)) {
      RankRow small, big{y};
      for (int x : a)
        if (x != y) small.push_back(x);
      big.insert(big.end(), b.begin(), b.end());
      candidates.emplace_back(std::move(small), std::move(big));
    }

  for (const auto& [ca, cb] : candidates) {
    auto rel = quadratic_relation(ca, cb);
    auto self = rel.find(p);
    if (self == rel.end() || abs(self->second) != 1) continue;
    bool decreasing = true;
    for (const auto& [q, c] : rel)
      if (q != p && !colex_less(q, p)) {
        decreasing = false;
        break;
      }
    if (!decreasing) continue;
    Rational inv = -1 / self->second;
    std::map<RowPair, Rational> acc;
    for (const auto& [q, c] : rel) {
      if (q == p) continue;
      const std::vector<Term>& sub = expand(q);
      for (const auto& t : sub) acc[t.pair] += inv * c * t.coeff;
    }
    std::vector<Term> out;
    for (auto& [q, c] : acc)
      if (sgn(c) != 0) out.push_back({c, q});
    return memo_[p] = std::move(out);
  }

  eliminate_class(p);
  auto it = memo_.find(p);
  if (it == memo_.end()) throw std::logic_error("pair straightening failed for " + pair_text(p));
  return it->second;
}

void PairStraightener::eliminate_class(const RowPair& p) {
  ++class_eliminations_;
  RankRow content = p.first;
  content.insert(content.end(), p.second.begin(), p.second.end());
  std::sort(content.begin(), content.end());
  const std::size_t k = content.size();
  if (k > 24) throw std::logic_error("pair class too large for elimination: " + pair_text(p));

  std::map<RowPair, std::size_t> columns;
  std::vector<RowPair> pairs;
  auto split = [&](std::uint32_t mask) {
    RankRow x, y;
    for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? x : y).push_back(content[i]);
    return std::make_pair(x, y);
  };
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) % 2) continue;
    auto [x, y] = split(mask);
    auto [sign, q] = canonical_pair(std::move(x), std::move(y));
    if (sign == 0 || columns.count(q)) continue;
    columns.emplace(q, 0);
    pairs.push_back(q);
  }
  // Non-standard pairs take the low column numbers so they are eliminated first.
  std::stable_partition(pairs.begin(), pairs.end(), [](const RowPair& q) { return !is_standard_pair(q); });
  for (std::size_t c = 0; c < pairs.size(); ++c) columns[pairs[c]] = c;

  RationalField field;
  SparseEchelon<RationalField> ech(field, pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    auto [x, y] = split(mask);
    SparseEchelon<RationalField>::Row row;
    for (const auto& [q, c] : quadratic_relation(x, y)) row.emplace_back(columns.at(q), c);
    std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    ech.insert(row);
  }

  for (std::size_t c = 0; c < pairs.size() && !is_standard_pair(pairs[c]); ++c) {
    const auto* piv = ech.pivot_row(c);
    if (!piv) throw std::logic_error("quadratic relations do not straighten " + pair_text(pairs[c]));
    SparseEchelon<RationalField>::Row tail(std::next(piv->begin()), piv->end());
    std::vector<Term> out;
    for (const auto& [col, v] : ech.reduce(tail)) {
      if (!is_standard_pair(pairs[col])) throw std::logic_error("non-standard remainder in pair elimination");
      out.push_back({-v, pairs[col]});
    }
    std::sort(out.begin(), out.end(), [](const Term& l, const Term& r) { return l.pair < r.pair; });
    memo_[pairs[c]] = std::move(out);
  }
}

}  // namespace sympf
