#include "flatribbon/ribbon_metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace flatribbon {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RibbonLengthReport ribbon_length(const GridDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw InvalidGridError(report);
  RibbonLengthReport out;
  out.horizontal_sum = horizontal_distance_sum(d);
  out.vertical_sum = vertical_distance_sum(d);
  out.total = out.horizontal_sum + out.vertical_sum;
  out.width = 1;
  out.ratio = Rational(out.total, out.width);
  return out;
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::quadratic:
      return "quadratic";
    case BoundKind::linear_torus:
      return "linear-torus";
    case BoundKind::linear_twist:
      return "linear-twist";
  }
  return "unknown";
}

long long quadratic_bound(int c) {
  if (c < 3) {
    throw std::invalid_argument("quadratic bound needs a nontrivial knot (crossing number >= 3)");
  }
  return 2LL * (c + 1) * (c + 2);
}

BoundCertificate certify_torus(const TorusParams& params) {
  const long long p = params.p();
  const long long q = params.q();
  const auto measured = ribbon_length(torus_grid(params));
  if (measured.total != 4 * p * q) {
    throw std::logic_error("torus grid length " + std::to_string(measured.total) +
                           " disagrees with 4pq = " + std::to_string(4 * p * q));
  }
  BoundCertificate cert;
  cert.knot_label = label(params);
  cert.crossing_number = crossing_number(params);
  cert.computed_length = measured.total;
  cert.bound_kind = BoundKind::linear_torus;
  cert.bound_value = 8LL * cert.crossing_number;
  cert.holds = cert.computed_length <= cert.bound_value;
  cert.ratio = Rational(cert.computed_length, cert.crossing_number);
  return cert;
}

BoundCertificate certify_twist(const TwistParams& params) {
  const long long n = params.n();
  const auto measured = ribbon_length(twist_grid(params));
  if (measured.total != 8 * n + 16) {
    throw std::logic_error("twist grid length " + std::to_string(measured.total) +
                           " disagrees with 8n + 16 = " + std::to_string(8 * n + 16));
  }
  BoundCertificate cert;
  cert.knot_label = label(params);
  cert.crossing_number = crossing_number(params);
  cert.computed_length = measured.total;
  cert.bound_kind = BoundKind::linear_twist;
  cert.bound_value = 8LL * cert.crossing_number;
  cert.holds = cert.computed_length <= cert.bound_value;
  cert.ratio = Rational(cert.computed_length, cert.crossing_number);
  return cert;
}

BoundCertificate certify_quadratic(const GridDiagram& d, int c, std::string knot_label) {
  const long long bound = quadratic_bound(c);
  const auto measured = ribbon_length(d);
  const long long n = d.size();

  BoundCertificate cert;
  cert.knot_label = std::move(knot_label);
  cert.crossing_number = c;
  cert.computed_length = measured.total;
  cert.bound_kind = BoundKind::quadratic;
  cert.bound_value = bound;
  cert.holds = measured.total <= bound;
  cert.ratio = Rational(measured.total, c);
  cert.grid_size = d.size();
  cert.grid_bound = 2 * n * (n - 1);
  cert.grid_bound_holds = measured.total <= *cert.grid_bound;
  return cert;
}

}  // namespace flatribbon
