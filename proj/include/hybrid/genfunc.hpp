#ifndef HYBRID_GENFUNC_HPP
#define HYBRID_GENFUNC_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hybrid/hybrid_number.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

namespace hybrid {

/// Coefficients 0..N of the formal series of (N0 + N1 t) / (1 - p t - q t^2).
struct SeriesExpansion {
  HoradamParams params;
  std::vector<HybridNumber<Rational>> coeffs;
};

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result = result * (n - k + j) / j;
  }
  return result;
}

/**
 * Coefficients of 1 / (1 - p t - q t^2) up to t^N, each from the closed sum
 *   u_r = sum_{k=0}^{floor(r/2)} C(r-k, k) p^{r-2k} q^k,
 * without using the recurrence.
 */
inline std::vector<Integer> reciprocal_series(const Integer& p, const Integer& q, std::int64_t terms) {
  std::vector<Integer> u;
  u.reserve(static_cast<std::size_t>(std::max<std::int64_t>(terms + 1, 0)));
  for (std::int64_t r = 0; r <= terms; ++r) {
    Integer sum = 0;
    for (std::int64_t k = 0; 2 * k <= r; ++k) {
      sum += binomial(r - k, k) * boost::multiprecision::pow(p, static_cast<unsigned>(r - 2 * k)) *
             boost::multiprecision::pow(q, static_cast<unsigned>(k));
    }
    u.push_back(std::move(sum));
  }
  return u;
}

/// HJ_0 = a + b i + (pb + qa) ε + ((p^2 + q) b + pqa) h, written out directly.
inline HybridNumber<Rational> genfunc_constant_term(const HoradamParams& params) {
  const Integer& p = params.p;
  const Integer& q = params.q;
  const Integer& a = params.a;
  const Integer& b = params.b;
  return {Rational(a), Rational(b), Rational(Integer(p * b + q * a)), Rational(Integer((p * p + q) * b + p * q * a))};
}

/// (b - pa) + qa i + qb ε + (pqb + q^2 a) h, the t-coefficient of the numerator.
inline HybridNumber<Rational> genfunc_linear_term(const HoradamParams& params) {
  const Integer& p = params.p;
  const Integer& q = params.q;
  const Integer& a = params.a;
  const Integer& b = params.b;
  return {Rational(Integer(b - p * a)), Rational(Integer(q * a)), Rational(Integer(q * b)),
          Rational(Integer(p * q * b + q * q * a))};
}

inline SeriesExpansion expand(const HoradamParams& params, std::int64_t terms) {
  params.validate();
  SeriesExpansion out{params, {}};
  if (terms < 0) return out;
  const auto u = reciprocal_series(params.p, params.q, terms);
  const auto n0 = genfunc_constant_term(params);
  const auto n1 = genfunc_linear_term(params);
  for (std::int64_t r = 0; r <= terms; ++r) {
    auto coeff = scale(n0, Rational(u[static_cast<std::size_t>(r)]));
    if (r >= 1) coeff += scale(n1, Rational(u[static_cast<std::size_t>(r - 1)]));
    out.coeffs.push_back(std::move(coeff));
  }
  return out;
}

struct ExpansionEntry {
  std::int64_t r;
  HybridNumber<Rational> coeff;
  HybridNumber<Rational> sequence;
  [[nodiscard]] bool matches() const { return coeff == sequence; }
};

struct ExpansionReport {
  HoradamParams params;
  std::vector<ExpansionEntry> entries;
  [[nodiscard]] bool all_match() const {
    return std::all_of(entries.begin(), entries.end(), [](const ExpansionEntry& e) { return e.matches(); });
  }
};

/// Compares every series coefficient against the recurrence-generated HJ_r.
inline ExpansionReport check_expansion(const HoradamParams& params, std::int64_t terms) {
  const auto series = expand(params, terms);
  SeqCache seq(params);
  ExpansionReport report{params, {}};
  for (std::size_t r = 0; r < series.coeffs.size(); ++r) {
    const auto idx = static_cast<std::int64_t>(r);
    report.entries.push_back({idx, series.coeffs[r], seq.hybrid(idx)});
  }
  return report;
}

}  // namespace hybrid

#endif  // HYBRID_GENFUNC_HPP
