#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sympf/index.hpp"

namespace sympf {

using Row = std::vector<Index>;

// Row comparison used to order rows inside a tableau: longer rows first,
// equal lengths compared lexicographically under ≺.
std::strong_ordering compare_rows(const Row& a, const Row& b);

// Sorts a row into ≺-increasing order and returns the permutation sign,
// or 0 when an index repeats.
int sort_row_symp(Row& row);

class Tableau {
 public:
  Tableau() = default;
  // Row lengths must be weakly decreasing and positive.
  explicit Tableau(std::vector<Row> rows);
  static Tableau from_signed(const std::vector<std::vector<int>>& rows);

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t row_count() const { return rows_.size(); }
  Shape shape() const;
  int cell_count() const;
  bool empty() const { return rows_.empty(); }
  bool is_even() const;
  bool valid_for(int r) const;
  std::vector<std::vector<int>> to_signed() const;
  std::string to_string() const;  // e.g. "[-1,-2/1,2]"

  friend bool operator==(const Tableau&, const Tableau&) = default;
  // Lexicographic over rows with compare_rows.
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

 private:
  std::vector<Row> rows_;
};

bool is_standard(const Tableau& t);
bool is_symplectic_standard(const Tableau& t);
bool is_canonical(const Tableau& t);

// (a_1, b_1, ..., a_r, b_r): a_p counts p̄, b_p counts p.
class TypeTuple {
 public:
  explicit TypeTuple(int r) : counts_(2 * r, 0) {}
  int r() const { return static_cast<int>(counts_.size() / 2); }
  int barred(int p) const { return counts_[2 * (p - 1)]; }
  int unbarred(int p) const { return counts_[2 * (p - 1) + 1]; }
  void add(Index x) { ++counts_[2 * (x.level() - 1) + (x.is_barred() ? 0 : 1)]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;

  friend bool operator==(const TypeTuple&, const TypeTuple&) = default;

 private:
  std::vector<int> counts_;
};

TypeTuple type_tuple(const Tableau& t, int r);
// Lexicographic on (b_r, a_r, ..., b_1, a_1).
std::strong_ordering compare_type(const TypeTuple& u, const TypeTuple& v);

// Lexicographic order on row words under ≺.
std::vector<Tableau> enumerate_symplectic_standard_even(const Shape& shape, int r);
std::uint64_t count_symplectic_standard_even(int m, int r);
// Every basis tableau of degree m (2m cells), shapes in enumerate_even_shapes order.
std::vector<Tableau> symplectic_basis(int m, int r);

}  // namespace sympf
