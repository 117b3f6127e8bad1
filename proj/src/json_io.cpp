#include "sympf/json_io.hpp"

#include "sympf/errors.hpp"

namespace sympf {

using nlohmann::json;

json tableau_to_json(const Tableau& t) { return json(t.to_signed()); }

Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("tableau must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("tableau row must be an array of signed integers");
    std::vector<int> codes;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw UsageError("tableau entry must be a signed integer");
      codes.push_back(x.get<int>());
    }
    rows.push_back(std::move(codes));
  }
  return Tableau::from_signed(rows);
}

json combo_to_json(const TabCombo& c) {
  json out = json::array();
  for (const auto& [t, coeff] : c.terms()) out.push_back({{"coeff", format_rational(coeff)}, {"tableau", tableau_to_json(t)}});
  return out;
}

TabCombo combo_from_json(const json& j, int r) {
  if (!j.is_array()) throw UsageError("combination must be an array of {coeff, tableau} objects");
  TabCombo out(r);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("tableau")) {
      throw UsageError("combination term needs 'coeff' and 'tableau'");
    }
    const auto& c = term.at("coeff");
    Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                     : c.is_number_integer() ? Rational(c.get<long>())
                                             : throw UsageError("coeff must be a string \"a/b\" or an integer");
    out.add(tableau_from_json(term.at("tableau")), coeff);
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format_rational(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("matrix row must be an array");
    std::vector<Rational> vals;
    for (const auto& x : row) {
      if (x.is_string()) vals.push_back(parse_rational(x.get<std::string>()));
      else if (x.is_number_integer()) vals.emplace_back(x.get<long>());
      else throw UsageError("matrix entry must be \"a/b\" or an integer");
    }
    rows.push_back(std::move(vals));
  }
  return Matrix::from_rows(rows);
}

}  // namespace sympf
