#include "flatribbon/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <set>
#include <stdexcept>

#include "flatribbon/ribbon_metrics.hpp"

namespace flatribbon {

namespace {

struct Dot {
  int row;
  int col;
  DotColor color;
};

std::vector<Dot> dots_of(const GridDiagram& d) {
  std::vector<Dot> dots;
  dots.reserve(2 * d.size());
  for (int r = 0; r < d.size(); ++r) {
    dots.push_back({r, d.black()[r], DotColor::black});
    dots.push_back({r, d.white()[r], DotColor::white});
  }
  return dots;
}

GridDiagram from_dots(const std::vector<Dot>& dots, int size) {
  std::vector<int> black(size, -1), white(size, -1);
  for (const auto& dot : dots) {
    auto& slot = dot.color == DotColor::black ? black[dot.row] : white[dot.row];
    if (slot != -1) throw std::logic_error("two dots of one color in a row");
    slot = dot.col;
  }
  return GridDiagram(std::move(black), std::move(white));
}

DotColor opposite(DotColor c) { return c == DotColor::black ? DotColor::white : DotColor::black; }

// Occupancy lookup for a valid diagram.
class Cells {
 public:
  explicit Cells(const GridDiagram& d) : n_(d.size()), cells_(d.size() * d.size(), 0) {
    for (int r = 0; r < n_; ++r) {
      cells_[r * n_ + d.black()[r]] = 1;
      cells_[r * n_ + d.white()[r]] = 2;
    }
  }
  bool inside(int r, int c) const { return r >= 0 && r < n_ && c >= 0 && c < n_; }
  bool occupied(int r, int c) const { return cells_[r * n_ + c] != 0; }

 private:
  int n_;
  std::vector<int> cells_;
};

bool non_interleaving(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const bool disjoint = a2 < b1 || b2 < a1;
  const bool nested = (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2);
  return disjoint || nested;
}

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

int other_col_in_row(const GridDiagram& d, int row, int col) {
  return d.black()[row] == col ? d.white()[row] : d.black()[row];
}

bool is_destabilization(const GridDiagram& d, const Cells& cells, const std::vector<int>& black_row,
                        const std::vector<int>& white_row, int r0, int c0, int dr, int dc) {
  if (d.size() <= 2) return false;  // would leave a degenerate 1 x 1 grid
  const int r1 = r0 + dr;
  const int c1 = c0 + dc;
  if (!cells.inside(r1, c1)) return false;
  if (other_col_in_row(d, r0, c0) != c1) return false;
  const int other_row = black_row[c0] == r0 ? white_row[c0] : black_row[c0];
  if (other_row != r1) return false;
  return !cells.occupied(r1, c1);
}

long long length_of(const GridDiagram& d) {
  return horizontal_distance_sum(d) + vertical_distance_sum(d);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed arithmetic on top of mt19937_64 so results do not depend on the
// standard library's distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

AnnealResult anneal_once(const GridDiagram& start, const SearchConfig& cfg, std::uint64_t seed) {
  Random rng(seed);
  const int max_size = start.size() + cfg.stabilization_budget;

  GridDiagram current = start;
  long long current_length = length_of(current);
  AnnealResult result{start, {}};
  result.report.initial_length = current_length;
  result.report.initial_size = start.size();
  result.report.trajectory.reserve(cfg.max_steps);

  double temperature = cfg.initial_temperature;
  for (int step = 0; step < cfg.max_steps; ++step) {
    const auto moves = legal_moves(current, current.size() < max_size);
    ++result.report.steps;
    if (moves.empty()) {
      result.report.trajectory.push_back(current_length);
      continue;
    }
    // Pick a move kind first so the many stabilizations do not swamp the walk.
    std::vector<MoveKind> kinds;
    for (const auto& m : moves) {
      if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) kinds.push_back(m.kind);
    }
    std::sort(kinds.begin(), kinds.end());
    const MoveKind kind = kinds[rng.below(kinds.size())];
    std::vector<const GridMove*> pool;
    for (const auto& m : moves) {
      if (m.kind == kind) pool.push_back(&m);
    }
    const GridMove& move = *pool[rng.below(pool.size())];

    GridDiagram candidate = apply_move(current, move);
    const long long candidate_length = length_of(candidate);
    const long long delta = candidate_length - current_length;
    const double u = rng.unit();
    const bool accept =
        delta <= 0 || u < std::exp(-static_cast<double>(delta) / std::max(temperature, 1e-12));
    if (accept) {
      ++result.report.accepted;
      current = std::move(candidate);
      current_length = candidate_length;
      if (better_diagram(current, result.best)) result.best = current;
    } else {
      ++result.report.rejected;
    }
    temperature *= cfg.cooling_rate;
    result.report.trajectory.push_back(current_length);
  }
  result.report.best_length = length_of(result.best);
  result.report.best_size = result.best.size();
  return result;
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::row_commutation:
      return "row-commutation";
    case MoveKind::column_commutation:
      return "column-commutation";
    case MoveKind::cyclic_row_shift:
      return "cyclic-row-shift";
    case MoveKind::cyclic_column_shift:
      return "cyclic-column-shift";
    case MoveKind::destabilization:
      return "destabilization";
    case MoveKind::stabilization:
      return "stabilization";
  }
  return "unknown";
}

std::string GridMove::to_string() const {
  std::string s = flatribbon::to_string(kind);
  switch (kind) {
    case MoveKind::row_commutation:
    case MoveKind::column_commutation:
    case MoveKind::cyclic_row_shift:
    case MoveKind::cyclic_column_shift:
      return s + "(" + std::to_string(index) + ")";
    case MoveKind::destabilization:
    case MoveKind::stabilization:
      return s + "(row " + std::to_string(row) + ", col " + std::to_string(col) + ", toward " +
             std::to_string(drow) + "," + std::to_string(dcol) + ")";
  }
  return s;
}

std::vector<GridMove> legal_moves(const GridDiagram& d, bool include_stabilizations) {
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  const int n = d.size();
  const auto black_row = inverse(d.black());
  const auto white_row = inverse(d.white());
  const Cells cells(d);

  std::vector<GridMove> moves;
  for (int r = 0; r + 1 < n; ++r) {
    if (non_interleaving(d.black()[r], d.white()[r], d.black()[r + 1], d.white()[r + 1])) {
      moves.push_back({MoveKind::row_commutation, r});
    }
  }
  for (int c = 0; c + 1 < n; ++c) {
    if (non_interleaving(black_row[c], white_row[c], black_row[c + 1], white_row[c + 1])) {
      moves.push_back({MoveKind::column_commutation, c});
    }
  }
  for (int shift : {1, -1}) moves.push_back({MoveKind::cyclic_row_shift, shift});
  for (int shift : {1, -1}) moves.push_back({MoveKind::cyclic_column_shift, shift});

  for (const auto& dot : dots_of(d)) {
    for (int dr : {-1, 1}) {
      for (int dc : {-1, 1}) {
        if (is_destabilization(d, cells, black_row, white_row, dot.row, dot.col, dr, dc)) {
          moves.push_back({MoveKind::destabilization, 0, dot.row, dot.col, dr, dc});
        }
      }
    }
  }
  if (include_stabilizations) {
    for (const auto& dot : dots_of(d)) {
      for (int dr : {-1, 1}) {
        for (int dc : {-1, 1}) {
          moves.push_back({MoveKind::stabilization, 0, dot.row, dot.col, dr, dc});
        }
      }
    }
  }
  return moves;
}

GridDiagram apply_move(const GridDiagram& d, const GridMove& move) {
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  const int n = d.size();
  std::vector<int> black = d.black();
  std::vector<int> white = d.white();

  switch (move.kind) {
    case MoveKind::row_commutation: {
      const int r = move.index;
      if (r < 0 || r + 1 >= n ||
          !non_interleaving(black[r], white[r], black[r + 1], white[r + 1])) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      std::swap(black[r], black[r + 1]);
      std::swap(white[r], white[r + 1]);
      return GridDiagram(std::move(black), std::move(white));
    }
    case MoveKind::column_commutation: {
      const int c = move.index;
      const auto br = inverse(black);
      const auto wr = inverse(white);
      if (c < 0 || c + 1 >= n || !non_interleaving(br[c], wr[c], br[c + 1], wr[c + 1])) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      auto swap_cols = [c](int& x) {
        if (x == c) {
          x = c + 1;
        } else if (x == c + 1) {
          x = c;
        }
      };
      std::for_each(black.begin(), black.end(), swap_cols);
      std::for_each(white.begin(), white.end(), swap_cols);
      return GridDiagram(std::move(black), std::move(white));
    }
    case MoveKind::cyclic_row_shift: {
      if (move.index != 1 && move.index != -1) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      std::vector<int> nb(n), nw(n);
      for (int r = 0; r < n; ++r) {
        const int to = ((r + move.index) % n + n) % n;
        nb[to] = black[r];
        nw[to] = white[r];
      }
      return GridDiagram(std::move(nb), std::move(nw));
    }
    case MoveKind::cyclic_column_shift: {
      if (move.index != 1 && move.index != -1) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      auto shift = [&](int& x) { x = ((x + move.index) % n + n) % n; };
      std::for_each(black.begin(), black.end(), shift);
      std::for_each(white.begin(), white.end(), shift);
      return GridDiagram(std::move(black), std::move(white));
    }
    case MoveKind::destabilization: {
      const Cells cells(d);
      const auto br = inverse(black);
      const auto wr = inverse(white);
      const int r0 = move.row, c0 = move.col;
      if (!cells.inside(r0, c0) || !cells.occupied(r0, c0) ||
          !is_destabilization(d, cells, br, wr, r0, c0, move.drow, move.dcol)) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      const int r1 = r0 + move.drow, c1 = c0 + move.dcol;
      const DotColor corner = black[r0] == c0 ? DotColor::black : DotColor::white;
      std::vector<Dot> kept;
      for (const auto& dot : dots_of(d)) {
        if (dot.row == r0 || dot.col == c0) continue;  // corner and both neighbours
        kept.push_back(dot);
      }
      kept.push_back({r1, c1, opposite(corner)});
      for (auto& dot : kept) {
        if (dot.row > r0) --dot.row;
        if (dot.col > c0) --dot.col;
      }
      return from_dots(kept, n - 1);
    }
    case MoveKind::stabilization: {
      const int r = move.row, c = move.col;
      if (r < 0 || r >= n || c < 0 || c >= n || (black[r] != c && white[r] != c) ||
          (move.drow != 1 && move.drow != -1) || (move.dcol != 1 && move.dcol != -1)) {
        throw std::invalid_argument("illegal move " + move.to_string());
      }
      const DotColor split = black[r] == c ? DotColor::black : DotColor::white;
      // The new row and column go on the corner's side of the split dot.
      const int insert_row = move.drow == 1 ? r : r + 1;
      const int insert_col = move.dcol == 1 ? c : c + 1;
      std::vector<Dot> dots;
      for (auto dot : dots_of(d)) {
        if (dot.row == r && dot.col == c) continue;
        if (dot.row >= insert_row) ++dot.row;
        if (dot.col >= insert_col) ++dot.col;
        dots.push_back(dot);
      }
      const int r1 = r + (r >= insert_row ? 1 : 0);
      const int c1 = c + (c >= insert_col ? 1 : 0);
      const int r0 = insert_row;
      const int c0 = insert_col;
      dots.push_back({r1, c0, split});
      dots.push_back({r0, c1, split});
      dots.push_back({r0, c0, opposite(split)});
      return from_dots(dots, n + 1);
    }
  }
  throw std::invalid_argument("unknown move kind");
}

void SearchConfig::check() const {
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  if (!(initial_temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (!(cooling_rate > 0.0) || cooling_rate > 1.0) {
    throw std::invalid_argument("cooling rate must lie in (0, 1]");
  }
  if (stabilization_budget < 0) throw std::invalid_argument("stabilization budget must be >= 0");
  if (restarts <= 0) throw std::invalid_argument("restarts must be positive");
}

bool better_diagram(const GridDiagram& a, const GridDiagram& b) {
  const long long la = length_of(a);
  const long long lb = length_of(b);
  if (la != lb) return la < lb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

AnnealResult anneal(const GridDiagram& d, const SearchConfig& config) {
  config.check();
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  trace(d);  // throws MultiComponentError for links

  std::vector<std::future<AnnealResult>> runs;
  for (int r = 0; r < config.restarts; ++r) {
    const std::uint64_t seed = splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(r)));
    runs.push_back(std::async(std::launch::async, anneal_once, std::cref(d), std::cref(config), seed));
  }
  AnnealResult merged;
  bool first = true;
  for (int r = 0; r < config.restarts; ++r) {
    AnnealResult result = runs[r].get();
    result.report.best_restart = r;
    if (first || better_diagram(result.best, merged.best)) {
      merged = std::move(result);
      first = false;
    }
  }
  return merged;
}

long long exhaustive_min(const GridDiagram& d, int depth) {
  if (d.size() > 7) throw std::invalid_argument("exhaustive search is capped at N <= 7");
  if (depth < 0 || depth > 6) throw std::invalid_argument("exhaustive search depth must be 0..6");
  const auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);

  std::set<GridDiagram> seen{d};
  std::vector<GridDiagram> frontier{d};
  long long best = length_of(d);
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<GridDiagram> next;
    for (const auto& g : frontier) {
      for (const auto& m : legal_moves(g, false)) {
        GridDiagram h = apply_move(g, m);
        if (!seen.insert(h).second) continue;
        best = std::min(best, length_of(h));
        next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return best;
}

}  // namespace flatribbon
