#pragma once

#include <string>
#include <vector>

#include "flatribbon/folded_ribbon.hpp"
#include "flatribbon/grid.hpp"

namespace flatribbon {

struct RenderStyle {
  double cell_px = 40.0;
  double dot_radius_px = 8.0;
  double gap_px = 12.0;
  std::string ribbon_fill = "#f4d58d";
  std::string ribbon_outline = "#8a6d1d";
  bool monochrome_dots = false;
  /// Draw vertical (over) ribbon pieces after horizontal ones.
  bool over_on_top = true;

  /// Throws std::invalid_argument unless gap < cell and radius < cell / 2.
  void check() const;
};

/// An SVG document kept as an ordered list of elements.
struct SvgDocument {
  double width = 0.0;
  double height = 0.0;
  double cell_px = 0.0;
  std::vector<std::string> elements;

  std::string str() const;
};

/// Lattice, black dots filled, white dots hollow.
SvgDocument render_grid(const GridDiagram& d, const RenderStyle& style = {});

/// Center-line with a gap in the horizontal strand at every crossing.
/// `grid_size` sets the canvas; the knot must come from a grid of that size.
SvgDocument render_knot(const KnotDiagram& k, int grid_size, const RenderStyle& style = {});

/// Width-1 ribbon: one rectangle per segment and a miter fold at every dot.
SvgDocument render_ribbon(const GridDiagram& d, const RenderStyle& style = {});

/// Named points, fold edges and the center-line of a folded twist ribbon.
SvgDocument render_fold(const fold::FoldedRibbonLayout& layout, const RenderStyle& style = {});

/// Fixed six-decimal formatting with trailing zeros removed.
std::string format_number(double v);

}  // namespace flatribbon
