#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "flatribbon/generators.hpp"
#include "flatribbon/grid.hpp"
#include "flatribbon/laurent.hpp"

namespace flatribbon {

/// One crossing in Wirtinger-arc labels. Arcs are maximal over-strand runs,
/// numbered in the order they are met along the knot; arc k ends at
/// under-pass k.
struct PDCrossing {
  int incoming_under = 0;
  int over = 0;
  int outgoing_under = 0;
  int sign = 0;  // +1 or -1

  /// Labels in counterclockwise order starting from the incoming under-strand:
  /// [incoming, over, outgoing, over].
  std::array<int, 4> cyclic() const { return {incoming_under, over, outgoing_under, over}; }

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  int arc_count() const { return static_cast<int>(crossings.size()); }
};

class UnknotDiagramError : public std::runtime_error {
 public:
  UnknotDiagramError() : std::runtime_error("diagram has no crossings: unknot diagram, no PD code") {}
};

class MalformedPDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UnknotDiagramError for a crossingless diagram.
PDCode pd_code(const KnotDiagram& k);

/// Checks every arc ends exactly once and starts exactly once, and that all
/// labels are in range. Throws MalformedPDError.
void check_pd(const PDCode& pd);

/// Alexander polynomial from the Wirtinger presentation, normalized so the
/// lowest exponent is 0 and the top coefficient is positive.
LaurentPoly alexander(const PDCode& pd);

/// Alexander polynomial of the knot traced by a grid; 1 for crossingless traces.
LaurentPoly alexander(const GridDiagram& d);

/// Determinant of a square matrix over Z[t, 1/t]. Unit pivots are eliminated
/// first, the remainder goes through fraction-free (Bareiss) elimination.
/// The result is exact up to a unit +-t^k.
LaurentPoly determinant_up_to_units(std::vector<std::vector<LaurentPoly>> matrix);

/// Closed-form family polynomials, normalized.
LaurentPoly torus_alexander(int p, int q);
LaurentPoly twist_alexander(int n);
LaurentPoly expected_alexander(const KnotFamily& family);

/// True iff the grid's Alexander polynomial matches `expected` up to units.
bool verify_family(const GridDiagram& d, const LaurentPoly& expected);

}  // namespace flatribbon
