#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatribbon/grid.hpp"

namespace flatribbon {

enum class MoveKind {
  row_commutation,
  column_commutation,
  cyclic_row_shift,
  cyclic_column_shift,
  destabilization,
  stabilization,
};

std::string to_string(MoveKind kind);

/// A grid move and where it applies.
///  - commutations: `index` and `index + 1` are swapped;
///  - cyclic shifts: everything moves by `index` (+1 or -1), wrapping around;
///  - (de)stabilizations: (`row`, `col`) is the corner dot of the L-shaped
///    kink and (`row + drow`, `col + dcol`) the cell where its two neighbours
///    merge. For a stabilization (`row`, `col`) is the dot being split.
struct GridMove {
  MoveKind kind = MoveKind::row_commutation;
  int index = 0;
  int row = 0;
  int col = 0;
  int drow = 0;
  int dcol = 0;

  std::string to_string() const;
  friend bool operator==(const GridMove&, const GridMove&) = default;
};

/// Commutations between non-interleaving adjacent rows/columns, cyclic
/// shifts, destabilizations at L-shaped corners, and optionally every
/// stabilization.
std::vector<GridMove> legal_moves(const GridDiagram& d, bool include_stabilizations = true);

/// Applies a move; throws std::invalid_argument if it is not legal for `d`.
GridDiagram apply_move(const GridDiagram& d, const GridMove& move);

struct SearchConfig {
  int max_steps = 2000;
  std::uint64_t seed = 1;
  double initial_temperature = 2.0;
  double cooling_rate = 0.995;
  int stabilization_budget = 1;
  int restarts = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void check() const;
};

struct AnnealReport {
  int steps = 0;
  int accepted = 0;
  int rejected = 0;
  long long initial_length = 0;
  long long best_length = 0;
  int initial_size = 0;
  int best_size = 0;
  int best_restart = 0;
  /// Current length after each step of the winning restart.
  std::vector<long long> trajectory;
};

struct AnnealResult {
  GridDiagram best;
  AnnealReport report;
};

/// Strict ordering used to pick the best diagram: shorter ribbon, then
/// smaller grid, then lexicographic dot lists.
bool better_diagram(const GridDiagram& a, const GridDiagram& b);

/// Simulated annealing over grid moves with geometric cooling. Restarts run
/// concurrently, each with its own copy and random stream. Never returns a
/// diagram longer than the input.
AnnealResult anneal(const GridDiagram& d, const SearchConfig& config);

/// Minimum ribbon length reachable with at most `depth` non-stabilizing
/// moves, by breadth-first enumeration. Requires N <= 7 and depth <= 6.
long long exhaustive_min(const GridDiagram& d, int depth);

}  // namespace flatribbon
