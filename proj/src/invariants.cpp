#include "flatribbon/invariants.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace flatribbon {

PDCode pd_code(const KnotDiagram& k) {
  const auto& xs = k.crossings;
  if (xs.empty()) throw UnknotDiagramError();
  const int m = static_cast<int>(xs.size());

  // crossings are stored in the order the walk meets their under-passes,
  // so the arc holding a vertical segment is the number of under-passes
  // met before it.
  std::vector<int> under_passes_before(k.segments.size() + 1, 0);
  for (const auto& x : xs) ++under_passes_before[x.under_segment + 1];
  std::partial_sum(under_passes_before.begin(), under_passes_before.end(),
                   under_passes_before.begin());

  PDCode pd;
  pd.crossings.reserve(m);
  for (int e = 0; e < m; ++e) {
    const auto& x = xs[e];
    PDCrossing c;
    c.incoming_under = e;
    c.outgoing_under = (e + 1) % m;
    c.over = under_passes_before[x.over_segment] % m;
    c.sign = x.sign;
    pd.crossings.push_back(c);
  }
  return pd;
}

void check_pd(const PDCode& pd) {
  const int m = pd.arc_count();
  std::vector<int> ends(m, 0), starts(m, 0);
  for (const auto& c : pd.crossings) {
    for (int label : c.cyclic()) {
      if (label < 0 || label >= m) {
        throw MalformedPDError("arc label " + std::to_string(label) + " out of range");
      }
    }
    if (c.sign != 1 && c.sign != -1) throw MalformedPDError("crossing sign must be +1 or -1");
    ++ends[c.incoming_under];
    ++starts[c.outgoing_under];
  }
  for (int a = 0; a < m; ++a) {
    if (ends[a] != 1 || starts[a] != 1) {
      throw MalformedPDError("arc " + std::to_string(a) + " must end once and start once under a "
                             "crossing");
    }
  }
}

namespace {

using SparseRow = std::map<int, LaurentPoly>;

LaurentPoly unit_inverse(const LaurentPoly& u) {
  const auto [e, c] = *u.terms().begin();
  return LaurentPoly::monomial(c, -e);
}

void add_to(SparseRow& row, int col, const LaurentPoly& value) {
  if (value.is_zero()) return;
  auto it = row.find(col);
  if (it == row.end()) {
    row.emplace(col, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) row.erase(it);
}

LaurentPoly bareiss(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return LaurentPoly();
      std::swap(m[k], m[swap_with]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_exactly(previous);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  return m[n - 1][n - 1];
}

}  // namespace

LaurentPoly determinant_up_to_units(std::vector<std::vector<LaurentPoly>> matrix) {
  const int n = static_cast<int>(matrix.size());
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
  }

  std::map<int, SparseRow> rows;
  for (int i = 0; i < n; ++i) {
    SparseRow r;
    for (int j = 0; j < n; ++j) {
      if (!matrix[i][j].is_zero()) r.emplace(j, matrix[i][j]);
    }
    rows.emplace(i, std::move(r));
  }
  std::vector<char> col_alive(n, 1);

  // Eliminate on unit entries while any remain; the Schur complement keeps
  // entries in Z[t, 1/t] and changes the determinant by a unit only.
  while (true) {
    std::vector<int> col_count(n, 0);
    for (const auto& [i, r] : rows) {
      for (const auto& [j, v] : r) ++col_count[j];
    }
    int best_row = -1, best_col = -1;
    long best_cost = std::numeric_limits<long>::max();
    for (const auto& [i, r] : rows) {
      for (const auto& [j, v] : r) {
        if (!v.is_unit()) continue;
        long cost = static_cast<long>(r.size() - 1) * (col_count[j] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (best_row < 0) break;

    SparseRow pivot_row = std::move(rows[best_row]);
    rows.erase(best_row);
    const LaurentPoly inv = unit_inverse(pivot_row.at(best_col));
    for (auto& [i, r] : rows) {
      auto it = r.find(best_col);
      if (it == r.end()) continue;
      const LaurentPoly factor = it->second * inv;
      for (const auto& [j, v] : pivot_row) add_to(r, j, -(factor * v));
      r.erase(best_col);
    }
    col_alive[best_col] = 0;
  }

  std::vector<int> cols;
  for (int j = 0; j < n; ++j) {
    if (col_alive[j]) cols.push_back(j);
  }
  if (cols.size() != rows.size()) throw std::logic_error("elimination lost squareness");

  std::vector<std::vector<LaurentPoly>> dense;
  for (const auto& [i, r] : rows) {
    std::vector<LaurentPoly> row(cols.size());
    int low = std::numeric_limits<int>::max();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto it = r.find(cols[k]);
      if (it == r.end()) continue;
      row[k] = it->second;
      low = std::min(low, it->second.min_degree());
    }
    if (low == std::numeric_limits<int>::max()) return LaurentPoly();  // zero row
    for (auto& v : row) v = v.shifted(-low);
    dense.push_back(std::move(row));
  }
  return bareiss(std::move(dense));
}

LaurentPoly alexander(const PDCode& pd) {
  check_pd(pd);
  const int m = pd.arc_count();
  if (m <= 1) return LaurentPoly(1);

  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly one(1);
  std::vector<std::vector<LaurentPoly>> matrix(m, std::vector<LaurentPoly>(m));
  for (int row = 0; row < m; ++row) {
    const auto& c = pd.crossings[row];
    // Fox derivatives of the Wirtinger relation, abelianized.
    if (c.sign > 0) {
      matrix[row][c.over] += t - one;
      matrix[row][c.incoming_under] += one;
      matrix[row][c.outgoing_under] -= t;
    } else {
      matrix[row][c.over] += one - t;
      matrix[row][c.incoming_under] += t;
      matrix[row][c.outgoing_under] -= one;
    }
  }
  // Any first elementary ideal generator: drop the last relation and generator.
  matrix.pop_back();
  for (auto& row : matrix) row.pop_back();
  return determinant_up_to_units(std::move(matrix)).normalized();
}

LaurentPoly alexander(const GridDiagram& d) {
  const auto k = trace(d);
  if (k.crossings.empty()) return LaurentPoly(1);
  return alexander(pd_code(k));
}

LaurentPoly torus_alexander(int p, int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
    throw std::invalid_argument("torus knot polynomial needs coprime positive p, q");
  }
  const LaurentPoly one(1);
  auto t_pow = [](int k) { return LaurentPoly::monomial(1, k); };
  const LaurentPoly num = (t_pow(p * q) - one) * (t_pow(1) - one);
  const LaurentPoly den = (t_pow(p) - one) * (t_pow(q) - one);
  return num.divided_exactly(den).normalized();
}

LaurentPoly twist_alexander(int n) {
  if (n < 1) throw std::invalid_argument("twist knot needs n >= 1");
  const std::int64_t m = n / 2;
  const std::int64_t outer = (n % 2 == 0) ? m : m + 1;
  const std::int64_t middle = -(2 * m + 1);
  return LaurentPoly::from_coefficients({outer, middle, outer}).normalized();
}

LaurentPoly expected_alexander(const KnotFamily& family) {
  struct Visitor {
    LaurentPoly operator()(const TorusParams& t) const { return torus_alexander(t.p(), t.q()); }
    LaurentPoly operator()(const TwistParams& t) const { return twist_alexander(t.n()); }
  };
  return std::visit(Visitor{}, family);
}

bool verify_family(const GridDiagram& d, const LaurentPoly& expected) {
  return alexander(d).equals_up_to_units(expected);
}

}  // namespace flatribbon
