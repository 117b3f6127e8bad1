#include "sympf/oracle.hpp"

#include <algorithm>
#include <variant>

#include "sympf/errors.hpp"
#include "sympf/linalg.hpp"
#include "sympf/matrix.hpp"

namespace sympf {

namespace {

void check_n(int n) {
  if (n < 4 || n % 2 != 0) throw UsageError("n must be even and at least 4, got " + std::to_string(n));
}

std::size_t binomial(std::size_t a, std::size_t b) {
  if (b > a) return 0;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= b; ++i) c = c * (a - b + i) / i;
  return c;
}

}  // namespace

std::vector<Poly> ideal_generators(int n) {
  check_n(n);
  const int r = n / 2;
  std::vector<Poly> gens;
  // (YᵀJY)_{ab} = Σ_c (Y_{c,a} Y_{c̄,b} - Y_{c̄,a} Y_{c,b}).
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Poly g(n);
      for (int c = 1; c <= r; ++c) {
        g += Poly::y(n, c, a) * Poly::y(n, r + c, b);
        g -= Poly::y(n, r + c, a) * Poly::y(n, c, b);
      }
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  Poly tr(n);
  for (int i = 1; i <= r; ++i) tr += Poly::y(n, i, r + i);
  gens.push_back(std::move(tr));
  return gens;
}

struct IdealOracle::Piece {
  std::map<Monomial, std::size_t, GrevlexGreater> column;
  std::vector<Monomial> monomials;
  std::variant<SparseEchelon<RationalField>, SparseEchelon<PrimeField>> echelon;
};

IdealOracle::IdealOracle(int n, FieldSpec field, std::size_t max_entries)
    : n_(n), field_(field), max_entries_(max_entries) {
  check_n(n);
  field_.require_valid_for(n / 2);
}

IdealOracle::~IdealOracle() = default;
IdealOracle::IdealOracle(IdealOracle&&) noexcept = default;
IdealOracle& IdealOracle::operator=(IdealOracle&&) noexcept = default;

std::size_t IdealOracle::monomial_count(int m) const {
  if (m < 0) return 0;
  std::size_t nv = variable_count(n_);
  return binomial(nv + m - 1, m);
}

std::size_t IdealOracle::size_estimate(int m) const {
  // One row per (generator, complementary monomial).
  std::size_t gens = variable_count(n_);  // degree-2 generators, upper bound
  std::size_t rows = (m >= 2 ? gens * monomial_count(m - 2) : 0) + (m >= 1 ? monomial_count(m - 1) : 0);
  return rows * monomial_count(m);
}

IdealOracle::Piece& IdealOracle::piece(int m) {
  if (m < 0) throw UsageError("degree must be non-negative");
  if (auto it = pieces_.find(m); it != pieces_.end()) return *it->second;
  std::size_t estimate = size_estimate(m);
  if (estimate > max_entries_) {
    throw BudgetExceeded("degree-" + std::to_string(m) + " piece for n=" + std::to_string(n_) + " needs a " +
                         std::to_string(estimate) + "-entry coefficient matrix (limit " +
                         std::to_string(max_entries_) + ")");
  }
  const int nv = variable_count(n_);
  auto pc = std::make_unique<Piece>(Piece{{}, monomials_of_degree(nv, m), SparseEchelon<RationalField>(RationalField{}, 0)});
  for (std::size_t c = 0; c < pc->monomials.size(); ++c) pc->column.emplace(pc->monomials[c], c);
  const std::size_t ncols = pc->monomials.size();

  auto fill = [&](auto& ech) {
    using Ech = std::decay_t<decltype(ech)>;
    for (const Poly& g : ideal_generators(n_)) {
      int d = *g.homogeneous_degree();
      if (d > m) continue;
      for (const Monomial& mu : monomials_of_degree(nv, m - d)) {
        typename Ech::Row row;
        for (const auto& [gm, c] : g.terms()) row.emplace_back(pc->column.at(gm * mu), ech.field().from_rational(c));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ech.insert(row);
      }
    }
  };
  if (field_.is_rational()) {
    SparseEchelon<RationalField> ech(RationalField{}, ncols);
    fill(ech);
    pc->echelon = std::move(ech);
  } else {
    SparseEchelon<PrimeField> ech(PrimeField(field_.prime), ncols);
    fill(ech);
    pc->echelon = std::move(ech);
  }
  return *pieces_.emplace(m, std::move(pc)).first->second;
}

std::size_t IdealOracle::dimension(int m) {
  Piece& pc = piece(m);
  std::size_t rank = std::visit([](const auto& e) { return e.rank(); }, pc.echelon);
  return pc.monomials.size() - rank;
}

namespace {

int require_homogeneous(const Poly& p, int n) {
  if (p.n() != n) throw UsageError("polynomial ring does not match the oracle's n");
  auto d = p.homogeneous_degree();
  if (!d) throw UsageError("normal form needs a homogeneous polynomial");
  return *d;
}

}  // namespace

Poly IdealOracle::normal_form(const Poly& p) {
  if (!field_.is_rational()) throw UsageError("normal_form is available over the rationals only");
  int m = require_homogeneous(p, n_);
  if (p.is_zero()) return p;
  Piece& pc = piece(m);
  auto& ech = std::get<SparseEchelon<RationalField>>(pc.echelon);
  SparseEchelon<RationalField>::Row row;
  for (const auto& [mono, c] : p.terms()) row.emplace_back(pc.column.at(mono), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Poly out(n_);
  for (const auto& [col, v] : ech.reduce(row)) out.add_term(pc.monomials[col], v);
  return out;
}

bool IdealOracle::in_ideal(const Poly& p) {
  int m = require_homogeneous(p, n_);
  if (p.is_zero()) return true;
  Piece& pc = piece(m);
  return std::visit(
      [&](const auto& ech) {
        using Ech = std::decay_t<decltype(ech)>;
        typename Ech::Row row;
        for (const auto& [mono, c] : p.terms()) row.emplace_back(pc.column.at(mono), ech.field().from_rational(c));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return ech.reduce(row).empty();
      },
      pc.echelon);
}

std::size_t graded_ideal_dimension(int n, int m, const FieldSpec& field) { return IdealOracle(n, field).dimension(m); }

Poly normal_form_modulo_ideal(const Poly& p, int m) {
  auto d = p.homogeneous_degree();
  if (!d || (!p.is_zero() && *d != m)) throw UsageError("polynomial is not homogeneous of degree " + std::to_string(m));
  return IdealOracle(p.n()).normal_form(p);
}

}  // namespace sympf
