#ifndef HYBRID_QUAD_EXT_HPP
#define HYBRID_QUAD_EXT_HPP

#include <cstdint>
#include <ostream>
#include <utility>

#include "hybrid/errors.hpp"
#include "hybrid/rational.hpp"

namespace hybrid {

/**
 * Element x + y*s of the commutative ring Q[s]/(s^2 - D).
 *
 * D is any nonzero integer. It may be negative or a perfect square: the ring
 * is treated formally, so closed forms built from the characteristic roots
 * stay exact regardless of the sign of the discriminant. Mixing elements
 * with different D raises DiscriminantMismatch.
 */
class QuadExt {
 public:
  QuadExt(Rational x, Rational y, Integer discriminant)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(discriminant)) {
    if (d_ == 0) {
      throw ArithmeticError("quadratic extension requires a nonzero discriminant");
    }
  }

  /// The rational r embedded as r + 0*s.
  static QuadExt scalar(Rational r, const Integer& discriminant) { return {std::move(r), Rational(0), discriminant}; }

  /// The generator s itself (s^2 = D).
  static QuadExt root(const Integer& discriminant) { return {Rational(0), Rational(1), discriminant}; }

  [[nodiscard]] const Rational& x() const { return x_; }
  [[nodiscard]] const Rational& y() const { return y_; }
  [[nodiscard]] const Integer& discriminant() const { return d_; }

  [[nodiscard]] bool is_rational() const { return y_.is_zero(); }

  /// Returns x; throws IrrationalResidue when the s-component is nonzero.
  [[nodiscard]] const Rational& rational_part() const {
    if (!is_rational()) {
      throw IrrationalResidue("irrational residue: " + to_string());
    }
    return x_;
  }

  /// x - y*s.
  [[nodiscard]] QuadExt conj() const { return {x_, -y_, d_}; }

  /// x^2 - D*y^2, which equals u * conj(u).
  [[nodiscard]] Rational norm() const { return x_ * x_ - Rational(d_) * y_ * y_; }

  [[nodiscard]] bool is_invertible() const { return !norm().is_zero(); }

  [[nodiscard]] QuadExt inverse() const {
    const Rational n = norm();
    if (n.is_zero()) {
      throw ArithmeticError("element " + to_string() + " is not invertible");
    }
    return {x_ / n, -y_ / n, d_};
  }

  /// Binary exponentiation; pow(0) is 1 and negative powers need an invertible base.
  [[nodiscard]] QuadExt pow(std::int64_t exponent) const {
    if (exponent < 0) {
      return inverse().pow(-exponent);
    }
    QuadExt result = scalar(Rational(1), d_);
    QuadExt base = *this;
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

  [[nodiscard]] std::string to_string() const {
    return x_.to_string() + " + " + y_.to_string() + "s [D=" + d_.str() + "]";
  }

  QuadExt& operator+=(const QuadExt& rhs) {
    check_compatible(rhs);
    x_ += rhs.x_;
    y_ += rhs.y_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& rhs) {
    check_compatible(rhs);
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& rhs) {
    check_compatible(rhs);
    Rational x = x_ * rhs.x_ + Rational(d_) * y_ * rhs.y_;
    Rational y = x_ * rhs.y_ + rhs.x_ * y_;
    x_ = std::move(x);
    y_ = std::move(y);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& rhs) {
    check_compatible(rhs);
    return *this *= rhs.inverse();
  }

  QuadExt& operator*=(const Rational& k) {
    x_ *= k;
    y_ *= k;
    return *this;
  }
  QuadExt& operator/=(const Rational& k) {
    x_ /= k;
    y_ /= k;
    return *this;
  }

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend QuadExt operator*(QuadExt lhs, const Rational& k) { return lhs *= k; }
  friend QuadExt operator*(const Rational& k, QuadExt rhs) { return rhs *= k; }
  friend QuadExt operator/(QuadExt lhs, const Rational& k) { return lhs /= k; }
  friend QuadExt operator-(const QuadExt& v) { return {-v.x_, -v.y_, v.d_}; }

  friend QuadExt operator+(QuadExt lhs, const Rational& k) {
    lhs.x_ += k;
    return lhs;
  }
  friend QuadExt operator-(QuadExt lhs, const Rational& k) {
    lhs.x_ -= k;
    return lhs;
  }

  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs) = default;

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.to_string(); }

 private:
  void check_compatible(const QuadExt& rhs) const {
    if (d_ != rhs.d_) {
      throw DiscriminantMismatch("quadratic extension discriminants differ: " + d_.str() + " vs " +
                                 rhs.d_.str());
    }
  }

  Rational x_;
  Rational y_;
  Integer d_;
};

/// The two roots of t^2 - p t - q.
struct CharacteristicRoots {
  QuadExt alpha;
  QuadExt beta;
};

/**
 * alpha = p/2 + s/2 and beta = p/2 - s/2 in Q[s]/(s^2 - D), D = p^2 + 4q.
 * Requires q != 0 and D != 0.
 */
inline CharacteristicRoots characteristic_roots(const Integer& p, const Integer& q) {
  if (q == 0) {
    throw InvalidParams("characteristic roots need q != 0");
  }
  const Integer d = p * p + 4 * q;
  if (d == 0) {
    throw InvalidParams("characteristic roots need p^2 + 4q != 0 (repeated root)");
  }
  const Rational half_p(p, 2);
  const Rational half(1, 2);
  return {QuadExt(half_p, half, d), QuadExt(half_p, -half, d)};
}

}  // namespace hybrid

#endif  // HYBRID_QUAD_EXT_HPP
