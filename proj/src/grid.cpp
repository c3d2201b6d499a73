#include "flatribbon/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace flatribbon {

namespace {

bool is_permutation_of_range(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t r = 0; r < perm.size(); ++r) inv[perm[r]] = static_cast<int>(r);
  return inv;
}

void require_valid(const GridDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> black, std::vector<int> white)
    : black_(std::move(black)), white_(std::move(white)) {
  if (black_.size() != white_.size()) {
    throw std::invalid_argument("black and white dot lists differ in length");
  }
}

int GridDiagram::black_row_of_column(int c) const {
  auto it = std::find(black_.begin(), black_.end(), c);
  if (it == black_.end()) throw std::out_of_range("no black dot in column");
  return static_cast<int>(it - black_.begin());
}

int GridDiagram::white_row_of_column(int c) const {
  auto it = std::find(white_.begin(), white_.end(), c);
  if (it == white_.end()) throw std::out_of_range("no white dot in column");
  return static_cast<int>(it - white_.begin());
}

ValidationReport validate(const GridDiagram& d) {
  ValidationReport report;
  report.size_positive = d.size() > 0;
  if (!report.size_positive) report.problems.emplace_back("grid has no rows");
  report.black_is_permutation = is_permutation_of_range(d.black());
  if (!report.black_is_permutation) {
    report.problems.emplace_back("black dots do not occupy every column exactly once");
  }
  report.white_is_permutation = is_permutation_of_range(d.white());
  if (!report.white_is_permutation) {
    report.problems.emplace_back("white dots do not occupy every column exactly once");
  }
  report.no_shared_cell = true;
  for (int r = 0; r < d.size(); ++r) {
    if (d.black()[r] == d.white()[r]) {
      report.no_shared_cell = false;
      report.problems.push_back("row " + std::to_string(r) + " has two dots in one cell");
    }
  }
  return report;
}

int Segment::length() const {
  return std::abs(end.col - start.col) + std::abs(end.row - start.row);
}

int Segment::direction() const {
  int delta = orientation == SegmentOrientation::horizontal ? end.col - start.col
                                                            : end.row - start.row;
  return delta > 0 ? 1 : -1;
}

InvalidGridError::InvalidGridError(const ValidationReport& report)
    : GridError("invalid grid diagram: " + join(report.problems)) {}

MultiComponentError::MultiComponentError(int components, int visited_rows, int size)
    : GridError("grid traces a link with " + std::to_string(components) +
                " components (first component visits " + std::to_string(visited_rows) +
                " of " + std::to_string(size) + " rows)"),
      components_(components) {}

int component_count(const GridDiagram& d) {
  require_valid(d);
  auto black_row = inverse(d.black());
  std::vector<char> seen(d.size(), 0);
  int components = 0;
  for (int start = 0; start < d.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    int r = start;
    do {
      seen[r] = 1;
      r = black_row[d.white()[r]];
    } while (r != start);
  }
  return components;
}

KnotDiagram trace(const GridDiagram& d, int start_row) {
  require_valid(d);
  const int n = d.size();
  if (start_row < 0 || start_row >= n) throw std::out_of_range("trace start row");
  auto black_row = inverse(d.black());

  KnotDiagram k;
  k.segments.reserve(2 * n);
  int r = start_row;
  int visited = 0;
  do {
    CellPoint b{d.black()[r], r};
    CellPoint w{d.white()[r], r};
    k.segments.push_back({b, w, SegmentOrientation::horizontal});
    int next = black_row[w.col];
    k.segments.push_back({w, CellPoint{w.col, next}, SegmentOrientation::vertical});
    r = next;
    ++visited;
  } while (r != start_row);

  if (visited != n) throw MultiComponentError(component_count(d), visited, n);
  k.crossings = find_crossings(k.segments);
  return k;
}

std::vector<Crossing> find_crossings(const std::vector<Segment>& segments) {
  std::vector<Crossing> out;
  for (int hi = 0; hi < static_cast<int>(segments.size()); ++hi) {
    const auto& h = segments[hi];
    if (h.orientation != SegmentOrientation::horizontal) continue;
    const int row = h.start.row;
    const int c_lo = std::min(h.start.col, h.end.col);
    const int c_hi = std::max(h.start.col, h.end.col);
    std::vector<Crossing> here;
    for (int vi = 0; vi < static_cast<int>(segments.size()); ++vi) {
      const auto& v = segments[vi];
      if (v.orientation != SegmentOrientation::vertical) continue;
      const int col = v.start.col;
      const int r_lo = std::min(v.start.row, v.end.row);
      const int r_hi = std::max(v.start.row, v.end.row);
      if (c_lo < col && col < c_hi && r_lo < row && row < r_hi) {
        // over = (0, dv), under = (dh, 0); z of over x under is -dv * dh
        int sign = -(v.direction() * h.direction());
        here.push_back({CellPoint{col, row}, vi, hi, sign});
      }
    }
    std::sort(here.begin(), here.end(), [&](const Crossing& a, const Crossing& b) {
      return std::abs(a.point.col - h.start.col) < std::abs(b.point.col - h.start.col);
    });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<Crossing> crossings(const GridDiagram& d) { return trace(d).crossings; }

GridDiagram transpose(const GridDiagram& d) {
  require_valid(d);
  return GridDiagram(inverse(d.black()), inverse(d.white()));
}

long long horizontal_distance_sum(const GridDiagram& d) {
  long long sum = 0;
  for (int r = 0; r < d.size(); ++r) sum += std::abs(d.black()[r] - d.white()[r]);
  return sum;
}

long long vertical_distance_sum(const GridDiagram& d) {
  auto black_row = inverse(d.black());
  auto white_row = inverse(d.white());
  long long sum = 0;
  for (int c = 0; c < d.size(); ++c) sum += std::abs(black_row[c] - white_row[c]);
  return sum;
}

std::string to_string(const GridDiagram& d) {
  std::ostringstream os;
  os << "N=" << d.size() << " black=[";
  for (int i = 0; i < d.size(); ++i) os << (i ? "," : "") << d.black()[i];
  os << "] white=[";
  for (int i = 0; i < d.size(); ++i) os << (i ? "," : "") << d.white()[i];
  os << "]";
  return os.str();
}

}  // namespace flatribbon
