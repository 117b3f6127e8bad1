#pragma once

#include <json.hpp>

#include "sympf/combo.hpp"
#include "sympf/matrix.hpp"
#include "sympf/tableau.hpp"

namespace sympf {

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
// [{"coeff": "a/b", "tableau": [[...], ...]}, ...]
nlohmann::json combo_to_json(const TabCombo& c);
TabCombo combo_from_json(const nlohmann::json& j, int r);
// Row-major arrays of "a/b" strings.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace sympf
