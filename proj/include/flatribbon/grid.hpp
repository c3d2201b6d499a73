#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatribbon {

/// N x N arc presentation. Row r carries a black dot in column black[r]
/// and a white dot in column white[r]; indices are 0-based and rows grow
/// upward. Construction does not check the grid rules, use validate().
class GridDiagram {
 public:
  GridDiagram() = default;
  GridDiagram(std::vector<int> black, std::vector<int> white);

  int size() const { return static_cast<int>(black_.size()); }
  const std::vector<int>& black() const { return black_; }
  const std::vector<int>& white() const { return white_; }

  /// Row holding the black (white) dot of column c. Requires a valid diagram.
  int black_row_of_column(int c) const;
  int white_row_of_column(int c) const;

  friend auto operator<=>(const GridDiagram&, const GridDiagram&) = default;

 private:
  std::vector<int> black_;
  std::vector<int> white_;
};

enum class DotColor { black, white };

/// Integer cell coordinates. The dot of cell (row, col) sits at the cell
/// center (col + 0.5, row + 0.5).
struct CellPoint {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const CellPoint&, const CellPoint&) = default;
};

struct ValidationReport {
  bool size_positive = false;
  bool black_is_permutation = false;
  bool white_is_permutation = false;
  bool no_shared_cell = false;
  std::vector<std::string> problems;

  bool ok() const {
    return size_positive && black_is_permutation && white_is_permutation && no_shared_cell;
  }
};

ValidationReport validate(const GridDiagram& d);

enum class SegmentOrientation { horizontal, vertical };

struct Segment {
  CellPoint start;
  CellPoint end;
  SegmentOrientation orientation = SegmentOrientation::horizontal;

  int length() const;
  /// +1 if the segment runs toward increasing coordinate, -1 otherwise.
  int direction() const;
};

/// A vertical strand passing over a horizontal one. The crossing sits at
/// the center of cell `point`.
struct Crossing {
  CellPoint point;
  int over_segment = 0;   // vertical
  int under_segment = 0;  // horizontal
  /// Writhe sign of the oriented crossing: sign of over x under.
  int sign = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented closed polyline. Segment 0 leaves the start row's black dot
/// horizontally; horizontal and vertical segments alternate.
struct KnotDiagram {
  std::vector<Segment> segments;
  std::vector<Crossing> crossings;
};

class GridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGridError : public GridError {
 public:
  explicit InvalidGridError(const ValidationReport& report);
};

/// The trace closed before visiting every dot: the diagram is a link.
class MultiComponentError : public GridError {
 public:
  MultiComponentError(int components, int visited_rows, int size);
  int components() const { return components_; }

 private:
  int components_;
};

/// Number of closed components traced by the diagram (1 for a knot).
int component_count(const GridDiagram& d);

/// Follows black -> white along rows and white -> black along columns,
/// starting at the black dot of row `start_row`.
KnotDiagram trace(const GridDiagram& d, int start_row = 0);

/// Crossings ordered by under-segment, then by distance along it, so the
/// order matches the under-passes met while walking the knot.
std::vector<Crossing> crossings(const GridDiagram& d);
std::vector<Crossing> find_crossings(const std::vector<Segment>& segments);

GridDiagram transpose(const GridDiagram& d);

/// Horizontal distance sum: sum over rows of |black - white|.
long long horizontal_distance_sum(const GridDiagram& d);
/// Vertical distance sum: sum over columns of the row gap between the two dots.
long long vertical_distance_sum(const GridDiagram& d);

std::string to_string(const GridDiagram& d);

}  // namespace flatribbon
