#include "flatribbon/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace flatribbon {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(std::int64_t constant) { set(0, constant); }

LaurentPoly LaurentPoly::from_coefficients(std::vector<std::int64_t> coefficients, int low) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    p.set(low + static_cast<int>(i), coefficients[i]);
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p;
  p.set(exponent, coefficient);
  return p;
}

void LaurentPoly::set(int exponent, std::int64_t value) {
  if (value == 0) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = value;
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

std::vector<std::int64_t> LaurentPoly::coefficients() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(span() + 1, 0);
  for (const auto& [e, c] : terms_) out[e - min_degree()] = c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, checked::add(coefficient(e), c));
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) set(e, checked::add(coefficient(e), checked::mul(c, -1)));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.set(ea + eb, checked::add(out.coefficient(ea + eb), checked::mul(ca, cb)));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.set(e, checked::mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::divided_exactly(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  const int lead_exp = divisor.max_degree();
  const std::int64_t lead = divisor.terms_.rbegin()->second;
  const int divisor_low = divisor.min_degree();
  while (!remainder.is_zero()) {
    const int e = remainder.max_degree();
    const std::int64_t c = remainder.terms_.rbegin()->second;
    // Once the remainder's span drops below the divisor's, nothing more divides.
    if (e - lead_exp + divisor_low < remainder.min_degree() || c % lead != 0) {
      throw std::domain_error("polynomial division is not exact");
    }
    auto term = monomial(c / lead, e - lead_exp);
    quotient += term;
    remainder -= term * divisor;
  }
  return quotient;
}

std::int64_t LaurentPoly::evaluate(std::int64_t t) const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t power = 1;
    if (t == 1) {
      power = 1;
    } else if (t == -1) {
      power = (e % 2 == 0) ? 1 : -1;
    } else {
      if (e < 0) throw std::domain_error("negative exponent at integer point");
      for (int i = 0; i < e; ++i) power = checked::mul(power, t);
    }
    sum = checked::add(sum, checked::mul(c, power));
  }
  return sum;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly out = shifted(-min_degree());
  if (out.terms_.rbegin()->second < 0) out = -out;
  return out;
}

bool LaurentPoly::equals_up_to_units(const LaurentPoly& other) const {
  return normalized() == other.normalized();
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace flatribbon
