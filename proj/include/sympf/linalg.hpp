#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sympf {

// Incremental row echelon form over a field. Columns with lower index are
// eliminated first, so remainders live on the highest non-pivot columns.
template <class Field>
class SparseEchelon {
 public:
  using Elem = typename Field::Elem;
  using Row = std::vector<std::pair<std::size_t, Elem>>;  // strictly increasing columns

  SparseEchelon(Field field, std::size_t ncols) : field_(std::move(field)), ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return pivots_.size(); }
  const Field& field() const { return field_; }

  // Returns true if the row was independent of the rows seen so far.
  bool insert(const Row& row) {
    Row rem = reduce(row);
    if (rem.empty()) return false;
    Elem lead_inv = field_.inv(rem.front().second);
    for (auto& [c, v] : rem) v = field_.mul(v, lead_inv);
    std::size_t lead = rem.front().first;
    pivots_.emplace(lead, std::move(rem));
    return true;
  }

  // Remainder modulo the row span, supported on non-pivot columns.
  Row reduce(const Row& row) const {
    std::map<std::size_t, Elem> acc;
    for (const auto& [c, v] : row) {
      if (field_.is_zero(v)) continue;
      auto [it, ins] = acc.try_emplace(c, v);
      if (!ins) it->second = field_.add(it->second, v);
    }
    for (auto it = acc.begin(); it != acc.end();) {
      if (field_.is_zero(it->second)) {
        it = acc.erase(it);
        continue;
      }
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Elem f = it->second;
      // Pivot rows start with (lead, 1); subtracting clears this column.
      for (auto e = std::next(p->second.begin()); e != p->second.end(); ++e) {
        auto [jt, ins] = acc.try_emplace(e->first, field_.neg(field_.mul(f, e->second)));
        if (!ins) jt->second = field_.sub(jt->second, field_.mul(f, e->second));
      }
      it = acc.erase(it);
    }
    Row out;
    for (auto& [c, v] : acc)
      if (!field_.is_zero(v)) out.emplace_back(c, std::move(v));
    return out;
  }

  const Row* pivot_row(std::size_t col) const {
    auto it = pivots_.find(col);
    return it == pivots_.end() ? nullptr : &it->second;
  }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

 private:
  Field field_;
  std::size_t ncols_;
  std::map<std::size_t, Row> pivots_;
};

}  // namespace sympf
