#include "sympf/index.hpp"

#include <functional>

#include "sympf/errors.hpp"

namespace sympf {

Index Index::from_signed(int code) {
  if (code == 0) throw UsageError("index code 0 is not valid");
  return code > 0 ? plain(code) : bar(-code);
}

Index Index::from_position(int position, int r) {
  if (position < 1 || position > 2 * r) {
    throw UsageError("matrix position " + std::to_string(position) + " outside 1.." + std::to_string(2 * r));
  }
  return position <= r ? plain(position) : bar(position - r);
}

std::string Index::to_string() const { return std::to_string(to_signed()); }

std::strong_ordering compare_symp(Index a, Index b) { return a <=> b; }

std::strong_ordering compare_numeric(Index a, Index b) {
  if (a.is_barred() != b.is_barred()) return a.is_barred() ? std::strong_ordering::greater : std::strong_ordering::less;
  return a.level() <=> b.level();
}

std::vector<Index> all_indices(int r) {
  std::vector<Index> out;
  for (int k = 0; k < 2 * r; ++k) out.push_back(Index::from_symp_rank(k));
  return out;
}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("shape parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("shape parts must be weakly decreasing");
  }
}

int Shape::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Shape::is_even() const {
  for (int p : parts_) {
    if (p % 2 != 0) return false;
  }
  return true;
}

std::string Shape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Shape> enumerate_even_shapes(int total, int max_part) {
  if (total < 0 || total % 2 != 0) throw UsageError("enumerate_even_shapes: total must be even and non-negative");
  std::vector<Shape> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    int top = std::min(remaining, bound);
    if (top % 2) --top;
    for (int p = top; p >= 2; p -= 2) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(total, max_part);
  return out;
}

}  // namespace sympf
