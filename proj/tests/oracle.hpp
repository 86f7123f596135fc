// Test-only reference implementations. Nothing here calls into the library's
// multiplication or sequence code, so they can check it.
#ifndef HYBRID_TESTS_ORACLE_HPP
#define HYBRID_TESTS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hybrid/hybrid_number.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

namespace oracle {

using hybrid::HybridNumber;
using hybrid::Rational;

// Unit table transcribed cell by cell, rows/columns ordered 1, i, ε, h.
// Each cell lists coefficients of (1, i, ε, h).
inline constexpr std::array<std::array<std::array<int, 4>, 4>, 4> kTable = {{
    // 1 * (1, i, ε, h)
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
    // i * (1, i, ε, h) = i, -1, 1-h, ε+i
    {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {1, 0, 0, -1}, {0, 1, 1, 0}}},
    // ε * (1, i, ε, h) = ε, 1+h, 0, -ε
    {{{0, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, -1, 0}}},
    // h * (1, i, ε, h) = h, -(ε+i), ε, 1
    {{{0, 0, 0, 1}, {0, -1, -1, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}},
}};

/// Bilinear expansion over the transcribed table: 16 unit products, summed.
template <class R>
std::array<R, 4> table_mul(const std::array<R, 4>& z, const std::array<R, 4>& w, const R& zero) {
  std::array<R, 4> out{zero, zero, zero, zero};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      const R prod = z[x] * w[y];
      for (int k = 0; k < 4; ++k) {
        const int c = kTable[x][y][k];
        if (c == 1) out[k] = out[k] + prod;
        if (c == -1) out[k] = out[k] - prod;
      }
    }
  }
  return out;
}

template <class R>
std::array<R, 4> to_array(const HybridNumber<R>& z) {
  return {z.scalar, z.i, z.eps, z.h};
}

template <class R>
HybridNumber<R> from_array(const std::array<R, 4>& a) {
  return {a[0], a[1], a[2], a[3]};
}

inline HybridNumber<Rational> mul(const HybridNumber<Rational>& z, const HybridNumber<Rational>& w) {
  return from_array(table_mul(to_array(z), to_array(w), Rational(0)));
}

inline HybridNumber<Rational> hyb(int a, int b, int c, int d) { return {a, b, c, d}; }

/// Terms J_lo..J_hi of the two-sided recurrence, filled outward from the seeds.
class NaiveSequence {
 public:
  NaiveSequence(int p, int q, int a, int b, std::int64_t lo, std::int64_t hi) {
    values_[0] = a;
    values_[1] = b;
    for (std::int64_t n = 2; n <= hi; ++n) values_[n] = Rational(p) * values_[n - 1] + Rational(q) * values_[n - 2];
    for (std::int64_t n = -1; n >= lo; --n) values_[n] = (values_[n + 2] - Rational(p) * values_[n + 1]) / Rational(q);
  }
  const Rational& operator[](std::int64_t n) const { return values_.at(n); }
  HybridNumber<Rational> block(std::int64_t n) const { return {values_.at(n), values_.at(n + 1), values_.at(n + 2), values_.at(n + 3)}; }

 private:
  std::map<std::int64_t, Rational> values_;
};

/// Random rational with numerator in [-9, 9] and denominator in [1, 9].
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(hybrid::Integer(num(rng)), hybrid::Integer(den(rng)));
}

inline HybridNumber<Rational> random_hybrid(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

/// The default verification grid: p in {1,2,3}, q in {-2,-1,1,2} with D != 0, four seed pairs.
inline std::vector<hybrid::HoradamParams> default_grid() {
  std::vector<hybrid::HoradamParams> out;
  for (int p : {1, 2, 3}) {
    for (int q : {-2, -1, 1, 2}) {
      if (p * p + 4 * q == 0) continue;
      for (auto [a, b] : std::array<std::pair<int, int>, 4>{{{0, 1}, {2, p}, {1, 1}, {2, 3}}}) {
        out.push_back({p, q, a, b});
      }
    }
  }
  return out;
}

}  // namespace oracle

#endif  // HYBRID_TESTS_ORACLE_HPP
