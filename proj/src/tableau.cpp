#include "sympf/tableau.hpp"

#include <algorithm>
#include <functional>

#include "sympf/errors.hpp"

namespace sympf {

std::strong_ordering compare_rows(const Row& a, const Row& b) {
  if (a.size() != b.size()) return b.size() <=> a.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

int sort_row_symp(Row& row) {
  int sign = 1;
  // Insertion sort keeps the transposition count explicit.
  for (std::size_t i = 1; i < row.size(); ++i) {
    for (std::size_t j = i; j > 0 && row[j] < row[j - 1]; --j) {
      std::swap(row[j], row[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < row.size(); ++i) {
    if (row[i] == row[i - 1]) return 0;
  }
  return sign;
}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw UsageError("tableau rows must be non-empty");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) {
      throw UsageError("tableau row lengths must be weakly decreasing");
    }
  }
}

Tableau Tableau::from_signed(const std::vector<std::vector<int>>& rows) {
  std::vector<Row> out;
  for (const auto& r : rows) {
    Row row;
    for (int code : r) row.push_back(Index::from_signed(code));
    out.push_back(std::move(row));
  }
  return Tableau(std::move(out));
}

Shape Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Shape(std::move(parts));
}

int Tableau::cell_count() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

bool Tableau::is_even() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.size() % 2 == 0; });
}

bool Tableau::valid_for(int r) const {
  for (const auto& row : rows_) {
    for (Index x : row) {
      if (!x.valid_for(r)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> Tableau::to_signed() const {
  std::vector<std::vector<int>> out;
  for (const auto& row : rows_) {
    std::vector<int> codes;
    for (Index x : row) codes.push_back(x.to_signed());
    out.push_back(std::move(codes));
  }
  return out;
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += "/";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ",";
      s += rows_[i][j].to_string();
    }
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end(),
                                                compare_rows);
}

bool is_standard(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && !(rows[i][j - 1] < rows[i][j])) return false;
      if (i > 0 && rows[i][j] < rows[i - 1][j]) return false;
    }
  }
  return true;
}

bool is_symplectic_standard(const Tableau& t) {
  if (!is_standard(t)) return false;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].level() < static_cast<int>(j) + 1) return false;
    }
  }
  return true;
}

bool is_canonical(const Tableau& t) {
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != Index::bar(static_cast<int>(j) + 1)) return false;
    }
  }
  return true;
}

int TypeTuple::total() const {
  int s = 0;
  for (int c : counts_) s += c;
  return s;
}

TypeTuple type_tuple(const Tableau& t, int r) {
  if (!t.valid_for(r)) throw UsageError("tableau entry outside 1..r for r=" + std::to_string(r));
  TypeTuple tt(r);
  for (const auto& row : t.rows()) {
    for (Index x : row) tt.add(x);
  }
  return tt;
}

std::strong_ordering compare_type(const TypeTuple& u, const TypeTuple& v) {
  if (u.r() != v.r()) throw UsageError("compare_type: type tuples for different r");
  const auto& a = u.counts();
  const auto& b = v.counts();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] <=> b[k];
  }
  return std::strong_ordering::equal;
}

std::vector<Tableau> enumerate_symplectic_standard_even(const Shape& shape, int r) {
  if (!shape.is_even()) throw UsageError("enumerate_symplectic_standard_even: shape " + shape.to_string() + " is not even");
  std::vector<Tableau> out;
  const auto& parts = shape.parts();
  if (!parts.empty() && parts[0] > r) return out;
  std::vector<Row> rows;
  for (int len : parts) rows.emplace_back(len, Index::plain(1));
  const int max_rank = 2 * r - 1;

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
    if (i == rows.size()) {
      out.emplace_back(rows);
      return;
    }
    if (j == rows[i].size()) {
      fill(i + 1, 0);
      return;
    }
    // Level of column j+1 entries must be at least j+1: rank >= 2j.
    int lo = 2 * static_cast<int>(j);
    if (j > 0) lo = std::max(lo, rows[i][j - 1].symp_rank() + 1);
    if (i > 0) lo = std::max(lo, rows[i - 1][j].symp_rank());
    // Leave room for the rest of the row to increase strictly.
    int hi = max_rank - static_cast<int>(rows[i].size() - 1 - j);
    for (int k = lo; k <= hi; ++k) {
      rows[i][j] = Index::from_symp_rank(k);
      fill(i, j + 1);
    }
  };
  fill(0, 0);
  return out;
}

std::vector<Tableau> symplectic_basis(int m, int r) {
  if (m < 0) throw UsageError("degree must be non-negative");
  std::vector<Tableau> out;
  for (const Shape& s : enumerate_even_shapes(2 * m, r)) {
    auto part = enumerate_symplectic_standard_even(s, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::uint64_t count_symplectic_standard_even(int m, int r) { return symplectic_basis(m, r).size(); }

}  // namespace sympf
