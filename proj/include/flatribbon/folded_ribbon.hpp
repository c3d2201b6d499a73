#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flatribbon::fold {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Flat twist-knot ribbon folded over itself. Points O..K are ribbon corners
/// and fold ends; x1..x9 are the midpoints of the fold lines that the
/// center-line visits.
struct FoldedRibbonLayout {
  double width = 1.0;
  int half_twists = 2;
  double fold_offset = 0.0;      // a = |FG| = (sqrt5 - 2) w
  double tan_half_theta2 = 0.0;  // tan of half the angle x5 x6 x7
  std::vector<std::pair<std::string, Point>> points;

  /// Throws std::out_of_range for unknown names.
  Point at(const std::string& name) const;
};

/// tan(theta2/2) forced by the layout: x5x6 is vertical and x6 -> x7 moves
/// by (w, -(3w + a)/2), so tan(theta2) = 2w / (3w + a).
double forced_tan_half_theta2();

/// Rejects w <= 0 and odd or nonpositive n.
FoldedRibbonLayout build_layout(double width, int half_twists);
/// Same, with tan(theta2/2) supplied by the caller (the total length does not
/// depend on it).
FoldedRibbonLayout build_layout(double width, int half_twists, double tan_half_theta2);

/// Waypoint sequence of the center-line. n >= 4 repeats the (x4 x5) pair
/// (n-2)/2 times; n = 2 goes straight from x3 to x6.
struct FoldPath {
  std::vector<std::string> waypoints;
  int twist_repeats = 0;

  /// Compact form, e.g. "x1 x2 [x3 (x4 x5)^2 x6 x7] x8 x9 x1".
  std::string to_string() const;
};

FoldPath fold_path(int half_twists);

/// The nine closed-form center-line pieces x1x2, x2x3, ..., x9x1.
std::vector<std::pair<std::string, double>> segment_lengths(const FoldedRibbonLayout& layout);

/// Euclidean distances between the same waypoint pairs.
std::vector<std::pair<std::string, double>> waypoint_distances(const FoldedRibbonLayout& layout);

/// Sum of Euclidean distances along a path through the layout's points.
double path_length(const FoldedRibbonLayout& layout, const FoldPath& path);

/// Center-line length of the layout for n half twists, summed over the
/// waypoint coordinates. n must be even and >= 2.
double total_length(double width, int half_twists);

/// Length bound per unit width: even n from the folded layout, odd n from the
/// mirror of the layout with n+1 half twists.
double upper_bound(int half_twists);

struct SlopeReport {
  double bound = 0.0;
  int crossing_number = 0;
  double slope_limit = 0.0;  // (sqrt5 + 2)/2 * c
  bool slope_check = false;
};

SlopeReport bound_vs_crossing(int half_twists);

/// (sqrt5 + 2) / 2, the slope claimed for n >= 10.
double slope_constant();

}  // namespace flatribbon::fold
