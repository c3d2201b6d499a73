#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "flatribbon/folded_ribbon.hpp"
#include "flatribbon/grid.hpp"
#include "flatribbon/laurent.hpp"
#include "flatribbon/optimizer.hpp"
#include "flatribbon/ribbon_metrics.hpp"

namespace flatribbon {

/// Grid JSON that does not follow {"size": N, "black": [...], "white": [...]}.
class GridFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json grid_to_json(const GridDiagram& d);
/// Checks the schema only; use validate() for the grid rules.
GridDiagram grid_from_json(const nlohmann::json& j);
GridDiagram parse_grid(const std::string& text);

nlohmann::ordered_json to_json(const Rational& r);
nlohmann::ordered_json to_json(const RibbonLengthReport& r);
nlohmann::ordered_json to_json(const BoundCertificate& c);
nlohmann::ordered_json to_json(const AnnealReport& r);
/// Exponent -> coefficient map, exponents as decimal strings.
nlohmann::ordered_json to_json(const LaurentPoly& p);
nlohmann::ordered_json to_json(const fold::FoldedRibbonLayout& layout, bool include_points = true);

}  // namespace flatribbon
