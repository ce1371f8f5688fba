#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "shc/lattice.hpp"
#include "shc/tableau.hpp"

namespace shc {

// Tableau JSON schema: {"shape":[...], "rows":[[...],...]} (rows left-aligned).
nlohmann::json tableau_to_json(const ShiftedTableau& t);
ShiftedTableau tableau_from_json(const nlohmann::json& j);

// Multichain text form: one path word per line, bottom first. Blank lines and
// trailing whitespace are ignored; the empty path is written as "-".
std::string multichain_to_text(const Multichain& c);
Multichain multichain_from_text(const std::string& text);

}  // namespace shc
