#include "flatribbon/folded_ribbon.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace flatribbon::fold {

namespace {

const double kSqrt5 = std::sqrt(5.0);

void check_even(int half_twists) {
  if (half_twists <= 0) throw std::invalid_argument("half twist count must be positive");
  if (half_twists % 2 != 0) {
    throw std::invalid_argument("folded layout needs an even half twist count; odd counts use the "
                                "mirror of the next even layout");
  }
}

// Center-line pieces in path order, as waypoint name pairs.
const std::vector<std::pair<std::string, std::string>> kPieces = {
    {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "x5"}, {"x5", "x6"},
    {"x6", "x7"}, {"x7", "x8"}, {"x8", "x9"}, {"x9", "x1"}};

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point FoldedRibbonLayout::at(const std::string& name) const {
  for (const auto& [n, p] : points) {
    if (n == name) return p;
  }
  throw std::out_of_range("no layout point named " + name);
}

double forced_tan_half_theta2() {
  // With w = 1: a = sqrt5 - 2, tan(theta2) = 2 / (3 + a) = (sqrt5 - 1) / 2.
  const double tan_theta2 = 2.0 / (3.0 + (kSqrt5 - 2.0));
  return tan_theta2 / (1.0 + std::sqrt(1.0 + tan_theta2 * tan_theta2));
}

FoldedRibbonLayout build_layout(double width, int half_twists) {
  return build_layout(width, half_twists, forced_tan_half_theta2());
}

FoldedRibbonLayout build_layout(double width, int half_twists, double tan_half_theta2) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("ribbon width must be positive");
  }
  check_even(half_twists);

  const double w = width;
  // tan(theta1) = 1/2 gives tan(theta1/2) = sqrt5 - 2.
  const double a = (kSqrt5 - 2.0) * w;
  const double t = tan_half_theta2;
  const double low = -(w + a) / 2.0;  // y of H and I

  FoldedRibbonLayout layout;
  layout.width = w;
  layout.half_twists = half_twists;
  layout.fold_offset = a;
  layout.tan_half_theta2 = t;
  layout.points = {
      {"O", {0.0, 0.0}},
      {"A", {0.0, w}},
      {"B", {w, w}},
      {"C", {w, w + w * t}},
      {"D", {2.0 * w, w}},
      {"E", {w, 0.0}},
      {"F", {2.0 * w, 0.0}},
      {"G", {2.0 * w + a, 0.0}},
      {"H", {0.0, low}},
      {"I", {w, low}},
      {"J", {2.0 * w, low + w * t}},
      {"K", {w, low + w * t}},
      {"x1", {0.0, w / 2.0}},
      {"x2", {2.0 * w + a / 2.0, w / 2.0}},
      {"x3", {w / 2.0, low / 2.0}},
      {"x4", {w / 2.0, w}},
      {"x5", {w / 2.0, low}},
      {"x6", {w / 2.0, w + w * t / 2.0}},
      {"x7", {1.5 * w, w * t / 2.0 + low}},
      {"x8", {1.5 * w, w}},
      {"x9", {1.5 * w, w / 2.0}},
  };
  return layout;
}

std::string FoldPath::to_string() const {
  std::ostringstream os;
  if (twist_repeats == 0) {
    os << "x1 x2 [x3 x6 x7] x8 x9 x1";
  } else {
    os << "x1 x2 [x3 (x4 x5)^" << twist_repeats << " x6 x7] x8 x9 x1";
  }
  return os.str();
}

FoldPath fold_path(int half_twists) {
  check_even(half_twists);
  FoldPath path;
  path.waypoints = {"x1", "x2", "x3"};
  if (half_twists >= 4) {
    path.twist_repeats = (half_twists - 2) / 2;
    for (int i = 0; i < path.twist_repeats; ++i) {
      path.waypoints.push_back("x4");
      path.waypoints.push_back("x5");
    }
  }
  for (const char* name : {"x6", "x7", "x8", "x9", "x1"}) path.waypoints.emplace_back(name);
  return path;
}

std::vector<std::pair<std::string, double>> segment_lengths(const FoldedRibbonLayout& layout) {
  const double w = layout.width;
  const double a = layout.fold_offset;
  const double t = layout.tan_half_theta2;
  const double long_leg = (3.0 * w + a) / 2.0;
  return {
      {"x1x2", 2.0 * w + a / 2.0},
      {"x2x3", std::sqrt(long_leg * long_leg + (long_leg / 2.0) * (long_leg / 2.0))},
      {"x3x4", (5.0 * w + a) / 4.0},
      {"x4x5", long_leg},
      {"x5x6", (w * t + 3.0 * w + a) / 2.0},
      {"x6x7", std::sqrt(w * w + long_leg * long_leg)},
      {"x7x8", (3.0 * w + a - w * t) / 2.0},
      {"x8x9", w / 2.0},
      {"x9x1", 1.5 * w},
  };
}

std::vector<std::pair<std::string, double>> waypoint_distances(const FoldedRibbonLayout& layout) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [from, to] : kPieces) {
    out.emplace_back(from + to, distance(layout.at(from), layout.at(to)));
  }
  return out;
}

double path_length(const FoldedRibbonLayout& layout, const FoldPath& path) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    sum += distance(layout.at(path.waypoints[i]), layout.at(path.waypoints[i + 1]));
  }
  return sum;
}

double total_length(double width, int half_twists) {
  const auto layout = build_layout(width, half_twists);
  return path_length(layout, fold_path(half_twists));
}

double upper_bound(int half_twists) {
  if (half_twists <= 0) throw std::invalid_argument("half twist count must be positive");
  const double golden = (kSqrt5 + 1.0) / 2.0;
  const double tail = std::sqrt((5.0 + kSqrt5) / 2.0);
  const double n = half_twists;
  if (half_twists % 2 == 0) return golden * n + (9.0 + kSqrt5) / 2.0 + tail;
  return golden * n + 5.0 + kSqrt5 + tail;
}

double slope_constant() { return (kSqrt5 + 2.0) / 2.0; }

SlopeReport bound_vs_crossing(int half_twists) {
  SlopeReport r;
  r.bound = upper_bound(half_twists);
  r.crossing_number = half_twists + 2;
  r.slope_limit = slope_constant() * r.crossing_number;
  r.slope_check = r.bound <= r.slope_limit;
  return r;
}

}  // namespace flatribbon::fold
