#include "flatribbon/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace flatribbon {

TorusParams::TorusParams(int p, int q) : p_(p), q_(q) {
  if (p < 2 || q <= p) {
    throw std::invalid_argument("torus parameters need 2 <= p < q, got (" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus parameters (" + std::to_string(p) + "," +
                                std::to_string(q) + ") are not coprime: that is a torus link");
  }
}

TwistParams::TwistParams(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("twist knot needs n >= 1 half twists");
}

GridDiagram torus_pattern(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("torus pattern needs positive p and q");
  const int n = p + q;
  std::vector<int> black(n), white(n);
  for (int i = 0; i < n; ++i) {
    black[i] = i;
    white[i] = ((i - p) % n + n) % n;
  }
  return GridDiagram(std::move(black), std::move(white));
}

GridDiagram torus_grid(const TorusParams& params) { return torus_pattern(params.p(), params.q()); }

GridDiagram twist_grid(const TwistParams& params) {
  const int n = params.n();
  const int size = n + 4;
  std::vector<int> black, white;
  black.reserve(size);
  white.reserve(size);

  // Clasp block. Which staircase end meets the long rows depends on the
  // parity of the staircase, hence two fillings.
  if (n % 2 == 0) {
    black = {1, 2, size - 1, 0};
    white = {size - 2, 0, 1, 3};
  } else {
    black = {size - 2, 2, 1, 0};
    white = {1, 0, size - 1, 3};
  }

  // Staircase: dot colors alternate by row so the two strands run in
  // opposite directions.
  for (int r = 4; r < size; ++r) {
    if (r % 2 == 0) {
      black.push_back(r);
      white.push_back(r - 2);
    } else {
      black.push_back(r - 2);
      white.push_back(r);
    }
  }
  return GridDiagram(std::move(black), std::move(white));
}

int crossing_number(const TorusParams& params) { return (params.p() - 1) * params.q(); }

int crossing_number(const TwistParams& params) { return params.n() + 2; }

int crossing_number(const KnotFamily& family) {
  return std::visit([](const auto& p) { return crossing_number(p); }, family);
}

std::string label(const KnotFamily& family) {
  struct Visitor {
    std::string operator()(const TorusParams& t) const {
      return "torus(" + std::to_string(t.p()) + "," + std::to_string(t.q()) + ")";
    }
    std::string operator()(const TwistParams& t) const {
      return "twist J(2,-" + std::to_string(t.n()) + ")";
    }
  };
  return std::visit(Visitor{}, family);
}

}  // namespace flatribbon
