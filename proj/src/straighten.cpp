#include "sympf/straighten.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sympf/errors.hpp"

namespace sympf {

namespace {

RankRow to_ranks(const Row& row) {
  RankRow out;
  for (Index x : row) out.push_back(x.symp_rank());
  return out;
}

Row from_ranks(const RankRow& ranks) {
  Row out;
  for (int k : ranks) out.push_back(Index::from_symp_rank(k));
  return out;
}

// Row index l such that rows l and l+1 break column weak increase.
std::optional<std::size_t> first_column_violation(const Tableau& t) {
  const auto& rows = t.rows();
  for (std::size_t l = 0; l + 1 < rows.size(); ++l)
    for (std::size_t c = 0; c < rows[l + 1].size(); ++c)
      if (rows[l + 1][c] < rows[l][c]) return l;
  return std::nullopt;
}

LevelSet set_difference(const LevelSet& a, const LevelSet& b) {
  LevelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LevelSet set_union(const LevelSet& a, const LevelSet& b) {
  LevelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<SympViolation> find_symp_violation(const Tableau& t, int r) {
  if (!t.valid_for(r)) throw UsageError("tableau " + t.to_string() + " has entries outside r=" + std::to_string(r));
  if (!is_standard(t)) throw UsageError("find_symp_violation: tableau " + t.to_string() + " is not standard");
  const auto& rows = t.rows();
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t h = 1; h <= width; ++h) {
    for (std::size_t l = 0; l < rows.size() && rows[l].size() >= h; ++l) {
      const Row& row = rows[l];
      if (row[h - 1].level() >= static_cast<int>(h)) continue;
      // Minimality of h and standardness force these two entries.
      if (h < 2 || row[h - 2] != Index::bar(static_cast<int>(h) - 1) || row[h - 1] != Index::plain(static_cast<int>(h) - 1)) {
        throw std::logic_error("violation in " + t.to_string() + " does not have the expected form");
      }
      SympViolation v;
      v.row = static_cast<int>(l) + 1;
      v.column = static_cast<int>(h);
      std::vector<int> seen_plain(r + 1, 0), seen_bar(r + 1, 0);
      for (std::size_t c = 0; c < h; ++c) (row[c].is_barred() ? seen_bar : seen_plain)[row[c].level()] = 1;
      for (int p = 1; p <= r; ++p) {
        if (seen_plain[p] && seen_bar[p]) v.gamma.push_back(p);
        else if (seen_plain[p] || seen_bar[p]) v.single.push_back(p);
      }
      LevelSet plain, barred;
      for (Index x : row) (x.is_barred() ? barred : plain).push_back(x.level());
      v.p_prime = set_difference(plain, v.gamma);
      v.q_prime = set_difference(barred, v.gamma);
      if (2 * v.gamma.size() + v.single.size() != h) throw std::logic_error("violation level count mismatch");
      return v;
    }
  }
  return std::nullopt;
}

TabCombo symp_relation_rhs(const LevelSet& p_prime, const LevelSet& q_prime, const LevelSet& gamma, int r) {
  check_level_set(p_prime, r);
  check_level_set(q_prime, r);
  check_level_set(gamma, r);
  if (gamma.empty()) throw UsageError("symp_relation_rhs: Gamma must be non-empty");
  if ((p_prime.size() + q_prime.size()) % 2 != 0) throw UsageError("symp_relation_rhs: |P'| + |Q'| must be even");
  const LevelSet used = set_union(p_prime, q_prime);
  for (int g : gamma)
    if (std::binary_search(used.begin(), used.end(), g)) throw UsageError("symp_relation_rhs: Gamma meets P' or Q'");
  LevelSet free;
  for (int p = 1; p <= r; ++p)
    if (!std::binary_search(used.begin(), used.end(), p) && !std::binary_search(gamma.begin(), gamma.end(), p))
      free.push_back(p);

  TabCombo out(r);
  const int outer = gamma.size() % 2 ? -1 : 1;
  const std::size_t k = gamma.size();
  LevelSet chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == k) {
      Row row = pq_sequence(set_union(p_prime, chosen), set_union(q_prime, chosen));
      int s = sort_row_symp(row);
      if (s != 0) out.add(Tableau({row}), outer * s);
      return;
    }
    for (std::size_t i = start; i < free.size(); ++i) {
      chosen.push_back(free[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

Straightener::Straightener(int r, std::size_t step_budget) : r_(r), budget_(step_budget) {
  if (r < 1) throw UsageError("Straightener needs r >= 1");
}

void Straightener::charge_step() {
  if (++steps_ > budget_) {
    throw BudgetExceeded("straightening exceeded its budget of " + std::to_string(budget_) + " steps (" +
                         std::to_string(stats_.dcp_steps) + " pair rewrites, " +
                         std::to_string(stats_.symplectic_steps) + " symplectic rewrites)");
  }
}

TabCombo Straightener::dcp_straighten(const TabCombo& c) {
  if (c.r() != r_) throw UsageError("combination r does not match straightener r");
  // Pair rewrites only produce tableaux below the one rewritten, so the
  // largest remaining tableau is always safe to settle next.
  TabCombo work = c;
  TabCombo done(r_);
  while (!work.is_zero()) {
    Tableau t = std::prev(work.terms().end())->first;
    Rational coeff = work.take(t);
    auto l = first_column_violation(t);
    if (!l) {
      done.add(TabCombo::single(t, r_, coeff));
      continue;
    }
    charge_step();
    ++stats_.dcp_steps;
    RowPair p{to_ranks(t.row(*l)), to_ranks(t.row(*l + 1))};
    for (const auto& term : pairs_.expand(p)) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < t.row_count(); ++i)
        if (i != *l && i != *l + 1) rows.push_back(t.row(i));
      rows.push_back(from_ranks(term.pair.first));
      if (!term.pair.second.empty()) rows.push_back(from_ranks(term.pair.second));
      std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return compare_rows(a, b) < 0; });
      work.add(Tableau(std::move(rows)), coeff * term.coeff);
    }
  }
  return done;
}

TabCombo Straightener::rewrite_violation(const Tableau& t, const SympViolation& v) {
  const Row& row = t.row(v.row - 1);
  Row pq = pq_sequence(set_union(v.p_prime, v.gamma), set_union(v.q_prime, v.gamma));
  // Pf(pq) = s * Pf(row), both orderings of the same entries.
  Row sorted = pq;
  const int s = sort_row_symp(sorted);
  if (s == 0 || sorted != row) throw std::logic_error("row does not match its level sets");
  TabCombo out(r_);
  const TabCombo rhs = symp_relation_rhs(v.p_prime, v.q_prime, v.gamma, r_);
  for (const auto& [one_row, c] : rhs.terms()) {
    std::vector<Row> rows = t.rows();
    rows[v.row - 1] = one_row.row(0);
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return compare_rows(a, b) < 0; });
    out.add(Tableau(std::move(rows)), s * c);
  }
  return out;
}

TabCombo Straightener::symp_normal_form(const TabCombo& c) {
  TabCombo cur = dcp_straighten(c);
  for (;;) {
    const Tableau* worst = nullptr;
    std::optional<TypeTuple> worst_type;
    for (const auto& [t, coeff] : cur.terms()) {
      if (is_symplectic_standard(t)) continue;
      TypeTuple tt = type_tuple(t, r_);
      if (!worst || compare_type(tt, *worst_type) < 0) {
        worst = &t;
        worst_type = tt;
      }
    }
    if (!worst) return cur;
    charge_step();
    ++stats_.symplectic_steps;
    Tableau t = *worst;
    auto v = find_symp_violation(t, r_);
    if (!v) throw std::logic_error("no violation found in non-symplectic tableau " + t.to_string());
    TabCombo rewritten = rewrite_violation(t, *v);
    for (const auto& [nt, nc] : rewritten.terms())
      if (compare_type(type_tuple(nt, r_), *worst_type) <= 0)
        throw std::logic_error("symplectic rewrite did not raise the type of " + t.to_string());
    Rational coeff = cur.take(t);
    cur.add(dcp_straighten(rewritten), coeff);
  }
}

TabCombo Straightener::multiply_basis(const Tableau& t1, const Tableau& t2) {
  std::vector<Row> rows = t1.rows();
  rows.insert(rows.end(), t2.rows().begin(), t2.rows().end());
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() > b.size(); });
  return symp_normal_form(TabCombo::single(Tableau(std::move(rows)), r_));
}

TabCombo dcp_straighten(const TabCombo& c) { return Straightener(c.r()).dcp_straighten(c); }
TabCombo symp_normal_form(const TabCombo& c) { return Straightener(c.r()).symp_normal_form(c); }
TabCombo multiply_basis(const Tableau& t1, const Tableau& t2, int r) { return Straightener(r).multiply_basis(t1, t2); }

}  // namespace sympf
