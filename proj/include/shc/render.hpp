#pragma once

#include <string>

#include "shc/lattice.hpp"
#include "shc/tableau.hpp"

namespace shc {

enum class FigureFormat { svg, tikz };

// Deterministic renderings (integer coordinates only, fixed ordering), so the
// same object always produces byte-identical output.
std::string render_path(const Path& p, FigureFormat fmt);
std::string render_tableau(const ShiftedTableau& t, FigureFormat fmt);
std::string render_multichain(const Multichain& c, FigureFormat fmt);

}  // namespace shc
