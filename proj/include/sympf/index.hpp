#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sympf {

// An element of {1..r, 1̄..r̄}. The configured r is not stored; validity is
// checked against it where needed.
class Index {
 public:
  constexpr Index(int level, bool barred) : level_(level), barred_(barred) {}
  static constexpr Index plain(int level) { return Index(level, false); }
  static constexpr Index bar(int level) { return Index(level, true); }
  // +i encodes i, -i encodes ī.
  static Index from_signed(int code);
  // 1-based matrix position: i -> i, ī -> r + i.
  static Index from_position(int position, int r);
  // 0-based rank in the ≺ order 1̄ ≺ 1 ≺ 2̄ ≺ 2 ≺ ...
  static constexpr Index from_symp_rank(int rank) { return Index(rank / 2 + 1, rank % 2 == 0); }

  constexpr int level() const { return level_; }
  constexpr bool is_barred() const { return barred_; }
  constexpr int to_signed() const { return barred_ ? -level_ : level_; }
  constexpr int position(int r) const { return barred_ ? r + level_ : level_; }
  constexpr int symp_rank() const { return 2 * (level_ - 1) + (barred_ ? 0 : 1); }
  constexpr bool valid_for(int r) const { return level_ >= 1 && level_ <= r; }
  constexpr Index conjugate() const { return Index(level_, !barred_); }

  std::string to_string() const;  // signed form, e.g. "2" or "-2"

  friend constexpr bool operator==(Index a, Index b) = default;
  // The default ordering is ≺; numeric order is available via compare_numeric.
  friend constexpr std::strong_ordering operator<=>(Index a, Index b) {
    return a.symp_rank() <=> b.symp_rank();
  }

 private:
  int level_;
  bool barred_;
};

std::strong_ordering compare_symp(Index a, Index b);
// 1 < 2 < ... < r < 1̄ < ... < r̄
std::strong_ordering compare_numeric(Index a, Index b);

struct NumericLess {
  bool operator()(Index a, Index b) const { return compare_numeric(a, b) < 0; }
};

// All 2r indices in ≺ order.
std::vector<Index> all_indices(int r);

// A partition: weakly decreasing positive parts.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);  // throws UsageError if not a partition

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of cells
  int rows() const { return static_cast<int>(parts_.size()); }
  bool is_even() const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

// Partitions of `total` into even parts <= max_part, lex-descending.
std::vector<Shape> enumerate_even_shapes(int total, int max_part);

}  // namespace sympf
