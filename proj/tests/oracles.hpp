#pragma once

// Reference computations used only by the tests. They share no code with
// the library: polynomials are plain coefficient maps and determinants use
// cofactor expansion.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Poly = std::map<int, long long>;  // exponent -> coefficient, no zeros

inline Poly clean(Poly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Poly add(const Poly& a, const Poly& b, long long sb = 1) {
  Poly r = a;
  for (const auto& [e, c] : b) r[e] += sb * c;
  return clean(r);
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  return clean(r);
}

/// Coefficients from the lowest exponent up, lowest exponent moved to 0 and
/// leading coefficient positive.
inline std::vector<long long> normalized(const Poly& p) {
  if (p.empty()) return {};
  const int lo = p.begin()->first, hi = p.rbegin()->first;
  std::vector<long long> v(hi - lo + 1, 0);
  for (const auto& [e, c] : p) v[e - lo] = c;
  if (v.back() < 0)
    for (auto& c : v) c = -c;
  return v;
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Two-bridge knot b(p, q), p odd: sum_{k<p} (-1)^k t^{s_k} with
/// s_k = sum_{i<=k} (-1)^floor(i q / p).
inline std::vector<long long> two_bridge_alexander(long long p, long long q) {
  Poly poly;
  long long s = 0;
  for (long long k = 0; k < p; ++k) {
    if (k > 0) s += (floor_div(k * q, p) % 2 == 0) ? 1 : -1;
    poly[static_cast<int>(s)] += (k % 2 == 0) ? 1 : -1;
  }
  return normalized(clean(poly));
}

/// J(2, -n) is the two-bridge knot b(2n+1, 1-2n).
inline std::vector<long long> twist_alexander(int n) { return two_bridge_alexander(2 * n + 1, 1 - 2 * n); }

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by power-series division.
inline std::vector<long long> torus_alexander(int p, int q) {
  auto poly_vec = [](const Poly& a) {
    std::vector<long long> v(a.rbegin()->first + 1, 0);
    for (const auto& [e, c] : a) v[e] = c;
    return v;
  };
  const Poly num = mul(Poly{{p * q, 1}, {0, -1}}, Poly{{1, 1}, {0, -1}});
  const Poly den = mul(Poly{{p, 1}, {0, -1}}, Poly{{q, 1}, {0, -1}});
  const auto nv = poly_vec(num), dv = poly_vec(den);
  const int deg = p * q + 1 - p - q;
  std::vector<long long> out(deg + 1, 0);
  for (int k = 0; k <= deg; ++k) {
    long long acc = k < static_cast<int>(nv.size()) ? nv[k] : 0;
    for (int j = 1; j <= k && j < static_cast<int>(dv.size()); ++j) acc -= dv[j] * out[k - j];
    out[k] = acc / dv[0];
  }
  Poly r;
  for (int k = 0; k <= deg; ++k) r[k] = out[k];
  return normalized(clean(r));
}

/// Cofactor expansion along the first row.
inline Poly laplace_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly{{0, 1}};
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    total = add(total, mul(m[0][j], laplace_det(minor)), j % 2 == 0 ? 1 : -1);
  }
  return total;
}

/// Edge-labelled planar diagram crossing X[i, j, k, l]: under strand i -> k,
/// over strand j, l.
using PDX = std::array<int, 4>;

inline int pd_sign(const PDX& x) {
  const int j = x[1], l = x[3];
  return (j - l == 1 || l - j > 1) ? 1 : -1;
}

struct WirtingerCrossing {
  int in, over, out, sign;
};

/// Merges the two over-edges of every crossing into one arc and relabels
/// arcs 0..m-1.
inline std::vector<WirtingerCrossing> wirtinger(const std::vector<PDX>& pd) {
  const int edges = static_cast<int>(2 * pd.size());
  std::vector<int> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& x : pd) parent[find(x[1])] = find(x[3]);
  std::map<int, int> arc_id;
  for (int e = 1; e <= edges; ++e) arc_id.emplace(find(e), static_cast<int>(arc_id.size()));
  std::vector<WirtingerCrossing> out;
  for (const auto& x : pd) {
    out.push_back({arc_id[find(x[0])], arc_id[find(x[1])], arc_id[find(x[2])], pd_sign(x)});
  }
  return out;
}

inline std::vector<long long> alexander(const std::vector<WirtingerCrossing>& xs) {
  const int m = static_cast<int>(xs.size());
  std::vector<std::vector<Poly>> a(m, std::vector<Poly>(m));
  for (int r = 0; r < m; ++r) {
    const auto& x = xs[r];
    // abelianized Fox derivatives of x_k^-1 x_i x_k x_j^-1 (times t) or x_k x_i x_k^-1 x_j^-1
    const Poly over = x.sign > 0 ? Poly{{1, 1}, {0, -1}} : Poly{{0, 1}, {1, -1}};
    const Poly in = x.sign > 0 ? Poly{{0, 1}} : Poly{{1, 1}};
    const Poly out = x.sign > 0 ? Poly{{1, -1}} : Poly{{0, -1}};
    a[r][x.over] = add(a[r][x.over], over);
    a[r][x.in] = add(a[r][x.in], in);
    a[r][x.out] = add(a[r][x.out], out);
  }
  a.pop_back();
  for (auto& row : a) row.pop_back();
  return normalized(laplace_det(a));
}

inline const std::vector<PDX>& trefoil_pd() {
  static const std::vector<PDX> pd{{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
  return pd;
}
inline const std::vector<PDX>& figure_eight_pd() {
  static const std::vector<PDX> pd{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
  return pd;
}
inline const std::vector<PDX>& five_two_pd() {
  static const std::vector<PDX> pd{{1, 5, 2, 4}, {3, 9, 4, 8}, {5, 1, 6, 10}, {7, 3, 8, 2}, {9, 7, 10, 6}};
  return pd;
}

/// Random valid grid as (black, white), not necessarily a knot.
inline std::pair<std::vector<int>, std::vector<int>> random_grid(int n, std::mt19937_64& rng) {
  std::vector<int> black(n), white(n);
  std::iota(black.begin(), black.end(), 0);
  while (true) {
    std::shuffle(black.begin(), black.end(), rng);
    white = black;
    std::shuffle(white.begin(), white.end(), rng);
    bool clash = false;
    for (int r = 0; r < n; ++r) clash = clash || black[r] == white[r];
    if (!clash) return {black, white};
  }
}

/// Components by following row and column partners.
inline int count_components(const std::vector<int>& black, const std::vector<int>& white) {
  const int n = static_cast<int>(black.size());
  std::vector<int> black_row(n), white_row(n);
  for (int r = 0; r < n; ++r) {
    black_row[black[r]] = r;
    white_row[white[r]] = r;
  }
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    int r = s;
    while (!seen[r]) {
      seen[r] = 1;
      r = black_row[white[r]];
    }
  }
  return comps;
}

/// Brute-force count of points where a vertical center-line piece passes
/// strictly through the interior of a horizontal one.
inline int count_crossings(const std::vector<int>& black, const std::vector<int>& white) {
  const int n = static_cast<int>(black.size());
  std::vector<int> black_row(n), white_row(n);
  for (int r = 0; r < n; ++r) {
    black_row[black[r]] = r;
    white_row[white[r]] = r;
  }
  int count = 0;
  for (int r = 0; r < n; ++r) {
    const double y = r + 0.5;
    const double x0 = std::min(black[r], white[r]) + 0.5, x1 = std::max(black[r], white[r]) + 0.5;
    for (int c = 0; c < n; ++c) {
      const double x = c + 0.5;
      const double y0 = std::min(black_row[c], white_row[c]) + 0.5;
      const double y1 = std::max(black_row[c], white_row[c]) + 0.5;
      if (x0 < x && x < x1 && y0 < y && y < y1) ++count;
    }
  }
  return count;
}

}  // namespace oracle
