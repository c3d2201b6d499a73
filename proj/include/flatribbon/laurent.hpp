#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace flatribbon {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
/// Arithmetic throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  /// Coefficients of t^low, t^(low+1), ...
  static LaurentPoly from_coefficients(std::vector<std::int64_t> coefficients, int low = 0);
  static LaurentPoly monomial(std::int64_t coefficient, int exponent);

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;  // +-t^k
  int min_degree() const;
  int max_degree() const;
  int span() const { return is_zero() ? 0 : max_degree() - min_degree(); }

  /// Ascending coefficient list from min_degree to max_degree.
  std::vector<std::int64_t> coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;
  /// t -> 1/t.
  LaurentPoly inverted() const;

  /// Exact quotient; throws std::domain_error if `divisor` does not divide.
  LaurentPoly divided_exactly(const LaurentPoly& divisor) const;

  /// Value at an integer point, only for nonnegative exponents or t = +-1.
  std::int64_t evaluate(std::int64_t t) const;

  /// Divides out the greatest common monomial and makes the leading
  /// coefficient positive. Two polynomials agree up to units +-t^k iff their
  /// normalized forms are equal.
  LaurentPoly normalized() const;
  bool equals_up_to_units(const LaurentPoly& other) const;

  /// "2t - 3 + 2t^-1" style.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void set(int exponent, std::int64_t value);
  std::map<int, std::int64_t> terms_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace flatribbon
