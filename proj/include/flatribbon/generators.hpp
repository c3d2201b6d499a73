#pragma once

#include <string>
#include <variant>

#include "flatribbon/grid.hpp"

namespace flatribbon {

/// (p, q) torus knot with 2 <= p < q and gcd(p, q) = 1. Swapped or
/// sign-flipped parameters are rejected, not normalized.
class TorusParams {
 public:
  TorusParams(int p, int q);
  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

/// Twist knot J(2, -n), n >= 1 half twists.
class TwistParams {
 public:
  explicit TwistParams(int n);
  int n() const { return n_; }

 private:
  int n_;
};

using KnotFamily = std::variant<TorusParams, TwistParams>;

/// Raw (p, q) torus pattern on a (p+q) grid without the coprimality check:
/// black dots on the main diagonal, white dot of row i in column (i - p) mod (p+q).
/// Non-coprime inputs give a link.
GridDiagram torus_pattern(int p, int q);

GridDiagram torus_grid(const TorusParams& params);

/// (n+4) x (n+4) grid of J(2, -n): a four-row clasp block followed by an
/// antiparallel two-strand staircase of n rows. Both distance sums are 4n + 8.
GridDiagram twist_grid(const TwistParams& params);

int crossing_number(const TorusParams& params);
int crossing_number(const TwistParams& params);
int crossing_number(const KnotFamily& family);

std::string label(const KnotFamily& family);

}  // namespace flatribbon
