#include "flatribbon/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace flatribbon {

namespace {

struct Vec {
  double x;
  double y;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }

// Maps model coordinates (y up) to pixels (y down).
class Frame {
 public:
  Frame(double min_x, double min_y, double max_x, double max_y, double scale, double margin)
      : min_x_(min_x), max_y_(max_y), scale_(scale), margin_(margin),
        width_((max_x - min_x) * scale + 2 * margin), height_((max_y - min_y) * scale + 2 * margin) {}

  double px(double x) const { return margin_ + (x - min_x_) * scale_; }
  double py(double y) const { return margin_ + (max_y_ - y) * scale_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double scale() const { return scale_; }

 private:
  double min_x_, max_y_, scale_, margin_, width_, height_;
};

Frame grid_frame(int n, const RenderStyle& s) { return Frame(0, 0, n, n, s.cell_px, s.cell_px / 2); }

std::string line(const Frame& f, Vec a, Vec b, const std::string& cls, const std::string& extra) {
  return "<line class=\"" + cls + "\" x1=\"" + format_number(f.px(a.x)) + "\" y1=\"" +
         format_number(f.py(a.y)) + "\" x2=\"" + format_number(f.px(b.x)) + "\" y2=\"" +
         format_number(f.py(b.y)) + "\" " + extra + "/>";
}

std::string polygon(const Frame& f, const std::vector<Vec>& pts, const std::string& cls,
                    const RenderStyle& s) {
  std::string out = "<polygon class=\"" + cls + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += format_number(f.px(pts[i].x)) + "," + format_number(f.py(pts[i].y));
  }
  return out + "\" fill=\"" + s.ribbon_fill + "\" stroke=\"" + s.ribbon_outline +
         "\" stroke-width=\"1\"/>";
}

void add_grid_lines(SvgDocument& doc, const Frame& f, int n) {
  const std::string extra = "stroke=\"#cccccc\" stroke-width=\"1\"";
  for (int i = 0; i <= n; ++i) doc.elements.push_back(line(f, {double(i), 0}, {double(i), double(n)}, "grid", extra));
  for (int i = 0; i <= n; ++i) doc.elements.push_back(line(f, {0, double(i)}, {double(n), double(i)}, "grid", extra));
}

void add_dots(SvgDocument& doc, const Frame& f, const GridDiagram& d, const RenderStyle& s) {
  for (int r = 0; r < d.size(); ++r) {
    for (DotColor color : {DotColor::black, DotColor::white}) {
      const int c = color == DotColor::black ? d.black()[r] : d.white()[r];
      const bool filled = color == DotColor::black || s.monochrome_dots;
      const std::string cls = s.monochrome_dots ? "dot" : (filled ? "dot black" : "dot white");
      doc.elements.push_back("<circle class=\"" + cls + "\" cx=\"" + format_number(f.px(c + 0.5)) +
                             "\" cy=\"" + format_number(f.py(r + 0.5)) + "\" r=\"" +
                             format_number(s.dot_radius_px) + "\" fill=\"" +
                             (filled ? "black" : "white") + "\" stroke=\"black\" stroke-width=\"1.5\"/>");
    }
  }
}

Vec center(CellPoint p) { return {p.col + 0.5, p.row + 0.5}; }

Vec unit(const Segment& s) {
  const int dir = s.direction();
  return s.orientation == SegmentOrientation::horizontal ? Vec{double(dir), 0} : Vec{0, double(dir)};
}

KnotDiagram checked_trace(const GridDiagram& d) {
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  return trace(d);
}

}  // namespace

void RenderStyle::check() const {
  if (!(cell_px > 0)) throw std::invalid_argument("cell size must be positive");
  if (!(gap_px >= 0) || gap_px >= cell_px) throw std::invalid_argument("gap width must be below the cell size");
  if (!(dot_radius_px > 0) || dot_radius_px >= cell_px / 2) {
    throw std::invalid_argument("dot radius must be below half the cell size");
  }
}

std::string format_number(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string SvgDocument::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(width) + "\" height=\"" +
         format_number(height) + "\" viewBox=\"0 0 " + format_number(width) + " " +
         format_number(height) + "\" data-cell-px=\"" + format_number(cell_px) + "\">\n";
  for (const auto& e : elements) out += "  " + e + "\n";
  out += "</svg>\n";
  return out;
}

SvgDocument render_grid(const GridDiagram& d, const RenderStyle& style) {
  style.check();
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  const Frame f = grid_frame(d.size(), style);
  SvgDocument doc{f.width(), f.height(), style.cell_px, {}};
  add_grid_lines(doc, f, d.size());
  add_dots(doc, f, d, style);
  return doc;
}

SvgDocument render_knot(const KnotDiagram& k, int grid_size, const RenderStyle& style) {
  style.check();
  const Frame f = grid_frame(grid_size, style);
  SvgDocument doc{f.width(), f.height(), style.cell_px, {}};
  add_grid_lines(doc, f, grid_size);

  const double half_gap = style.gap_px / style.cell_px / 2;
  const std::string extra = "stroke=\"black\" stroke-width=\"2\"";
  std::vector<std::string> under, over;
  for (std::size_t i = 0; i < k.segments.size(); ++i) {
    const Segment& s = k.segments[i];
    const Vec a = center(s.start), b = center(s.end);
    if (s.orientation == SegmentOrientation::vertical) {
      over.push_back(line(f, a, b, "over", extra));
      continue;
    }
    std::vector<double> cuts;
    for (const auto& x : k.crossings) {
      if (x.under_segment == static_cast<int>(i)) cuts.push_back(x.point.col + 0.5);
    }
    std::sort(cuts.begin(), cuts.end());
    if (s.direction() < 0) std::reverse(cuts.begin(), cuts.end());
    const double dir = s.direction();
    double from = a.x;
    for (double c : cuts) {
      under.push_back(line(f, {from, a.y}, {c - dir * half_gap, a.y}, "under", extra));
      from = c + dir * half_gap;
    }
    under.push_back(line(f, {from, a.y}, b, "under", extra));
  }
  doc.elements.insert(doc.elements.end(), under.begin(), under.end());
  doc.elements.insert(doc.elements.end(), over.begin(), over.end());
  return doc;
}

SvgDocument render_ribbon(const GridDiagram& d, const RenderStyle& style) {
  style.check();
  const KnotDiagram k = checked_trace(d);
  const Frame f = grid_frame(d.size(), style);
  SvgDocument doc{f.width(), f.height(), style.cell_px, {}};
  add_grid_lines(doc, f, d.size());

  std::vector<std::string> under, over, folds;
  for (const auto& s : k.segments) {
    const Vec a = center(s.start), b = center(s.end);
    const Vec lo{std::min(a.x, b.x), std::min(a.y, b.y)};
    const Vec hi{std::max(a.x, b.x), std::max(a.y, b.y)};
    const bool horizontal = s.orientation == SegmentOrientation::horizontal;
    const Vec p0 = horizontal ? Vec{lo.x, lo.y - 0.5} : Vec{lo.x - 0.5, lo.y};
    const Vec p1 = horizontal ? Vec{hi.x, hi.y + 0.5} : Vec{hi.x + 0.5, hi.y};
    const std::vector<Vec> rect{p0, {p1.x, p0.y}, p1, {p0.x, p1.y}};
    (horizontal ? under : over).push_back(polygon(f, rect, horizontal ? "ribbon under" : "ribbon over", style));
  }
  // Fold at each dot: the outer quarter of the unit square around the dot,
  // cut by the 45-degree crease.
  const std::size_t m = k.segments.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Segment& in = k.segments[i];
    const Segment& out = k.segments[(i + 1) % m];
    const Vec p = center(in.end);
    const Vec u = unit(in), v = unit(out);
    const std::vector<Vec> quad{p, p + 0.5 * u, p + 0.5 * u + (-0.5) * v, p + (-0.5) * v};
    folds.push_back(polygon(f, quad, "ribbon fold", style));
    folds.push_back(line(f, p + (-0.5) * u + 0.5 * v, p + 0.5 * u + (-0.5) * v, "crease",
                         "stroke=\"" + style.ribbon_outline + "\" stroke-width=\"1\""));
  }
  auto append = [&doc](const std::vector<std::string>& v) {
    doc.elements.insert(doc.elements.end(), v.begin(), v.end());
  };
  if (style.over_on_top) {
    append(under);
    append(folds);
    append(over);
  } else {
    append(over);
    append(folds);
    append(under);
  }
  add_dots(doc, f, d, style);
  return doc;
}

SvgDocument render_fold(const fold::FoldedRibbonLayout& layout, const RenderStyle& style) {
  style.check();
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  for (const auto& [name, p] : layout.points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const Frame f(min_x, min_y, max_x, max_y, style.cell_px, style.cell_px);
  SvgDocument doc{f.width(), f.height(), style.cell_px, {}};

  auto at = [&layout](const std::string& name) {
    const auto p = layout.at(name);
    return Vec{p.x, p.y};
  };
  const std::string edge_extra = "stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";
  for (const char* e : {"AB", "AC", "BD", "DG", "DE", "OI", "HI", "IJ"}) {
    const std::string a(1, e[0]), b(1, e[1]);
    doc.elements.push_back(line(f, at(a), at(b), "fold-edge", edge_extra + " data-edge=\"" + e + "\""));
  }

  const auto path = fold::fold_path(layout.half_twists);
  std::string pts;
  for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
    const Vec p = at(path.waypoints[i]);
    if (i) pts += " ";
    pts += format_number(f.px(p.x)) + "," + format_number(f.py(p.y));
  }
  doc.elements.push_back("<polyline class=\"centerline\" points=\"" + pts +
                         "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>");

  for (const auto& [name, p] : layout.points) {
    doc.elements.push_back("<circle class=\"point\" data-name=\"" + name + "\" data-x=\"" +
                           format_number(p.x) + "\" data-y=\"" + format_number(p.y) + "\" cx=\"" +
                           format_number(f.px(p.x)) + "\" cy=\"" + format_number(f.py(p.y)) +
                           "\" r=\"3\" fill=\"black\"/>");
    doc.elements.push_back("<text class=\"label\" x=\"" + format_number(f.px(p.x) + 4) + "\" y=\"" +
                           format_number(f.py(p.y) - 4) + "\" font-size=\"12\">" + name + "</text>");
  }
  const Vec x4 = at("x4"), x5 = at("x5");
  const Vec mid = 0.5 * (x4 + x5);
  doc.elements.push_back("<text class=\"twist-repeats\" data-repeats=\"" +
                         std::to_string(path.twist_repeats) + "\" x=\"" + format_number(f.px(mid.x) + 6) +
                         "\" y=\"" + format_number(f.py(mid.y)) + "\" font-size=\"12\">(x4 x5) x " +
                         std::to_string(path.twist_repeats) + "</text>");
  return doc;
}

}  // namespace flatribbon
