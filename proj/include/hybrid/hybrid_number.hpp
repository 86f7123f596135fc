#ifndef HYBRID_HYBRID_NUMBER_HPP
#define HYBRID_HYBRID_NUMBER_HPP

#include <array>
#include <cmath>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "hybrid/quad_ext.hpp"
#include "hybrid/rational.hpp"

namespace hybrid {

/// Coefficient ring usable inside HybridNumber: a commutative ring with +, -, *.
template <class R>
concept CoefficientRing = std::copy_constructible<R> && std::equality_comparable<R> && requires(R a, R b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
};

enum class Basis { one = 0, i = 1, eps = 2, h = 3 };

inline constexpr std::array<Basis, 4> kBasis = {Basis::one, Basis::i, Basis::eps, Basis::h};

inline std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::one: return "1";
    case Basis::i: return "i";
    case Basis::eps: return "ε";
    case Basis::h: return "h";
  }
  return "?";
}

/**
 * Hybrid number scalar + i*i + eps*ε + h*h over a commutative coefficient ring R,
 * with i^2 = -1, ε^2 = 0, h^2 = 1 and ih = -hi = ε + i.
 *
 * Multiplication is associative but not commutative. Coefficients of R
 * commute with the units, so R-scaling is unambiguous from either side.
 */
template <CoefficientRing R>
struct HybridNumber {
  R scalar;
  R i;
  R eps;
  R h;

  /// The basis unit b with coefficients in R. Only for rings with integer literals.
  static HybridNumber unit(Basis b)
    requires std::constructible_from<R, int>
  {
    HybridNumber z{R(0), R(0), R(0), R(0)};
    z[b] = R(1);
    return z;
  }

  static HybridNumber zero()
    requires std::constructible_from<R, int>
  {
    return {R(0), R(0), R(0), R(0)};
  }

  R& operator[](Basis b) {
    switch (b) {
      case Basis::one: return scalar;
      case Basis::i: return i;
      case Basis::eps: return eps;
      case Basis::h: return h;
    }
    return scalar;
  }
  const R& operator[](Basis b) const { return const_cast<HybridNumber&>(*this)[b]; }

  HybridNumber& operator+=(const HybridNumber& w) {
    scalar = scalar + w.scalar;
    i = i + w.i;
    eps = eps + w.eps;
    h = h + w.h;
    return *this;
  }
  HybridNumber& operator-=(const HybridNumber& w) {
    scalar = scalar - w.scalar;
    i = i - w.i;
    eps = eps - w.eps;
    h = h - w.h;
    return *this;
  }

  friend HybridNumber operator+(HybridNumber z, const HybridNumber& w) { return z += w; }
  friend HybridNumber operator-(HybridNumber z, const HybridNumber& w) { return z -= w; }
  friend HybridNumber operator-(const HybridNumber& z) { return {-z.scalar, -z.i, -z.eps, -z.h}; }

  /// Bilinear extension of the unit multiplication table.
  friend HybridNumber operator*(const HybridNumber& z, const HybridNumber& w) {
    const R& a1 = z.scalar;
    const R& b1 = z.i;
    const R& c1 = z.eps;
    const R& d1 = z.h;
    const R& a2 = w.scalar;
    const R& b2 = w.i;
    const R& c2 = w.eps;
    const R& d2 = w.h;
    const R bd = b1 * d2;
    const R db = d1 * b2;
    return {
        a1 * a2 - b1 * b2 + b1 * c2 + c1 * b2 + d1 * d2,
        a1 * b2 + b1 * a2 + bd - db,
        a1 * c2 + c1 * a2 + bd - db - c1 * d2 + d1 * c2,
        a1 * d2 + d1 * a2 - b1 * c2 + c1 * b2,
    };
  }

  friend bool operator==(const HybridNumber&, const HybridNumber&) = default;

  friend std::ostream& operator<<(std::ostream& os, const HybridNumber& z) {
    return os << "(" << z.scalar << ", " << z.i << ", " << z.eps << ", " << z.h << ")";
  }
};

/// Component-wise scaling by anything that multiplies into R (R itself, or Rational for QuadExt).
template <CoefficientRing R, class K>
  requires requires(R r, K k) {
    { r * k } -> std::convertible_to<R>;
  }
HybridNumber<R> scale(const HybridNumber<R>& z, const K& k) {
  return {z.scalar * k, z.i * k, z.eps * k, z.h * k};
}

/// z + k, where k lands in the real (scalar) part.
template <CoefficientRing R, class K>
HybridNumber<R> add_scalar(HybridNumber<R> z, const K& k) {
  z.scalar = z.scalar + k;
  return z;
}

template <CoefficientRing R, class F>
auto transform(const HybridNumber<R>& z, F&& f) {
  using T = std::decay_t<decltype(f(z.scalar))>;
  return HybridNumber<T>{f(z.scalar), f(z.i), f(z.eps), f(z.h)};
}

template <CoefficientRing R>
HybridNumber<R> conjugate(const HybridNumber<R>& z) {
  return {z.scalar, -z.i, -z.eps, -z.h};
}

/// C(z) = a^2 + (b - c)^2 - c^2 - d^2, the real part of z * conj(z).
template <CoefficientRing R>
R character(const HybridNumber<R>& z) {
  const R b_minus_c = z.i - z.eps;
  return z.scalar * z.scalar + b_minus_c * b_minus_c - z.eps * z.eps - z.h * z.h;
}

/// zw - wz.
template <CoefficientRing R>
HybridNumber<R> commutator(const HybridNumber<R>& z, const HybridNumber<R>& w) {
  return z * w - w * z;
}

enum class NormClass { positive, null, negative };

inline std::string_view to_string(NormClass c) {
  switch (c) {
    case NormClass::positive: return "positive";
    case NormClass::null: return "null";
    case NormClass::negative: return "negative";
  }
  return "?";
}

/// sqrt(|C(z)|) as a double, tagged with the sign of C(z); the exact value is character(z).
struct Norm {
  double value;
  NormClass kind;
};

inline Norm norm(const HybridNumber<Rational>& z) {
  const Rational c = character(z);
  const NormClass kind = c.sign() > 0 ? NormClass::positive : (c.sign() < 0 ? NormClass::negative : NormClass::null);
  return {std::sqrt(std::abs(c.to_double())), kind};
}

/// Embeds a rational hybrid into Q[s]/(s^2 - D).
inline HybridNumber<QuadExt> lift(const HybridNumber<Rational>& z, const Integer& discriminant) {
  return transform(z, [&](const Rational& r) { return QuadExt::scalar(r, discriminant); });
}

/// Projects every component to the rationals; throws IrrationalResidue on a nonzero s-part.
inline HybridNumber<Rational> project(const HybridNumber<QuadExt>& z) {
  return transform(z, [](const QuadExt& u) { return u.rational_part(); });
}

using BasisTable = std::array<std::array<HybridNumber<Integer>, 4>, 4>;

/// All 16 unit products, indexed [row][column] in the order 1, i, ε, h.
inline BasisTable basis_table() {
  BasisTable table{};
  for (const Basis row : kBasis) {
    for (const Basis col : kBasis) {
      table[static_cast<int>(row)][static_cast<int>(col)] =
          HybridNumber<Integer>::unit(row) * HybridNumber<Integer>::unit(col);
    }
  }
  return table;
}

/**
 * Renders an integer hybrid in the typeset style of the unit table: terms
 * ordered 1, ε, i, h, and a purely negative multi-term vector part written
 * as -(...), e.g. "1-h", "ε+i", "-(ε+i)", "-ε", "0".
 */
inline std::string format_unit_product(const HybridNumber<Integer>& z) {
  static constexpr std::array<Basis, 4> kOrder = {Basis::one, Basis::eps, Basis::i, Basis::h};
  auto term = [](const Integer& coeff, Basis b, bool first) {
    std::string out;
    Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
    if (coeff < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    if (b == Basis::one) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += basis_name(b);
    }
    return out;
  };

  int nonzero = 0;
  bool all_negative = true;
  for (const Basis b : kOrder) {
    if (z[b] != 0) {
      ++nonzero;
      all_negative = all_negative && z[b] < 0;
    }
  }
  if (nonzero == 0) {
    return "0";
  }
  if (nonzero > 1 && all_negative) {
    return "-(" + format_unit_product(-z) + ")";
  }
  std::string out;
  for (const Basis b : kOrder) {
    if (z[b] != 0) {
      out += term(z[b], b, out.empty());
    }
  }
  return out;
}

}  // namespace hybrid

#endif  // HYBRID_HYBRID_NUMBER_HPP
