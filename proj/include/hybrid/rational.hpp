#ifndef HYBRID_RATIONAL_HPP
#define HYBRID_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hybrid/errors.hpp"

namespace hybrid {

/// Unbounded signed integer.
using Integer = boost::multiprecision::cpp_int;

/**
 * Exact signed rational number with unbounded numerator and denominator.
 *
 * Values are always stored in lowest terms with a positive denominator, so
 * zero is 0/1 and equality is structural. Division by zero raises
 * ArithmeticError instead of producing an unnormalized value.
 */
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(value) {}  // NOLINT: implicit by design of the number tower

  Rational(const Integer& value) : value_(value) {}  // NOLINT

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
      throw ArithmeticError("rational with zero denominator");
    }
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  /// Parses "num/den" or an integer shorthand "num". Optional leading '-'.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const { return boost::multiprecision::numerator(value_); }
  [[nodiscard]] Integer denominator() const { return boost::multiprecision::denominator(value_); }

  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return denominator() == 1; }
  [[nodiscard]] int sign() const { return value_.sign(); }

  [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }

  /// "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string to_string() const {
    if (is_integer()) {
      return numerator().str();
    }
    return numerator().str() + "/" + denominator().str();
  }

  [[nodiscard]] Rational reciprocal() const {
    if (is_zero()) {
      throw ArithmeticError("reciprocal of zero");
    }
    return from_raw(1 / value_);
  }

  /// Integer power; negative exponents require a nonzero base.
  [[nodiscard]] Rational pow(std::int64_t exponent) const {
    if (exponent < 0) {
      return reciprocal().pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
      if ((e & 1U) != 0) {
        result *= base;
      }
      e >>= 1U;
      if (e != 0) {
        base *= base;
      }
    }
    return result;
  }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
      throw ArithmeticError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return from_raw(-v.value_); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

 private:
  static Rational from_raw(boost::multiprecision::cpp_rational raw) {
    Rational r;
    r.value_ = std::move(raw);
    return r;
  }

  boost::multiprecision::cpp_rational value_;
};

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) {
    throw ParseError("malformed rational: '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(detail::parse_integer(text, text));
  }
  const auto num = detail::parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("negative denominator in rational: '" + std::string(text) + "'");
  }
  const auto den = detail::parse_integer(den_text, text);
  if (den == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace hybrid

#endif  // HYBRID_RATIONAL_HPP
