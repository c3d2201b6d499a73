#pragma once

#include <optional>
#include <string>

#include "flatribbon/generators.hpp"
#include "flatribbon/grid.hpp"

namespace flatribbon {

/// Reduced fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

/// Ribbon obtained by thickening every grid segment to width 1. Lengths are
/// center-line lengths in cell units; the fold overlaps are not subtracted.
struct RibbonLengthReport {
  long long horizontal_sum = 0;
  long long vertical_sum = 0;
  long long total = 0;
  int width = 1;
  Rational ratio;  // total / width
};

RibbonLengthReport ribbon_length(const GridDiagram& d);

enum class BoundKind { quadratic, linear_torus, linear_twist };

std::string to_string(BoundKind kind);

struct BoundCertificate {
  std::string knot_label;
  int crossing_number = 0;
  long long computed_length = 0;
  BoundKind bound_kind = BoundKind::quadratic;
  long long bound_value = 0;
  bool holds = false;
  Rational ratio;  // computed_length / crossing_number

  // Quadratic certificates also carry the grid-size bound 2N(N-1).
  std::optional<int> grid_size;
  std::optional<long long> grid_bound;
  std::optional<bool> grid_bound_holds;
};

/// 2 (c+1)(c+2). Rejects c < 3.
long long quadratic_bound(int crossing_number);

BoundCertificate certify_torus(const TorusParams& params);
BoundCertificate certify_twist(const TwistParams& params);

/// `crossing_number` is trusted caller input; this library never guesses it.
BoundCertificate certify_quadratic(const GridDiagram& d, int crossing_number,
                                   std::string knot_label = "grid");

}  // namespace flatribbon
