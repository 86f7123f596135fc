#ifndef HYBRID_SEQUENCES_HPP
#define HYBRID_SEQUENCES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybrid/errors.hpp"
#include "hybrid/hybrid_number.hpp"
#include "hybrid/quad_ext.hpp"
#include "hybrid/rational.hpp"

namespace hybrid {

/**
 * Parameters of the Horadam recurrence J_n = p J_{n-1} + q J_{n-2} with
 * J_0 = a, J_1 = b. Seeds (0, 1) give the (p,q)-Fibonacci numbers and
 * (2, p) the (p,q)-Lucas numbers.
 */
struct HoradamParams {
  Integer p;
  Integer q;
  Integer a;
  Integer b;

  static HoradamParams fibonacci(const Integer& p, const Integer& q) { return {p, q, 0, 1}; }
  static HoradamParams lucas(const Integer& p, const Integer& q) { return {p, q, 2, p}; }

  [[nodiscard]] Integer discriminant() const { return p * p + 4 * q; }

  [[nodiscard]] bool valid() const { return q != 0 && discriminant() != 0; }

  void validate() const {
    if (q == 0) {
      throw InvalidParams("q must be nonzero (p=" + p.str() + ", q=0)");
    }
    if (discriminant() == 0) {
      throw InvalidParams("p^2 + 4q must be nonzero (p=" + p.str() + ", q=" + q.str() + ")");
    }
  }

  friend bool operator==(const HoradamParams&, const HoradamParams&) = default;
};

enum class SeqKind { fib, lucas, horadam };

inline std::string_view to_string(SeqKind kind) {
  switch (kind) {
    case SeqKind::fib: return "fib";
    case SeqKind::lucas: return "lucas";
    case SeqKind::horadam: return "horadam";
  }
  return "?";
}

/// The params actually iterated for a kind: fib and lucas override the seeds.
inline HoradamParams effective_params(const HoradamParams& params, SeqKind kind) {
  switch (kind) {
    case SeqKind::fib: return HoradamParams::fibonacci(params.p, params.q);
    case SeqKind::lucas: return HoradamParams::lucas(params.p, params.q);
    case SeqKind::horadam: return params;
  }
  return params;
}

/// J_n for any signed n. Negative indices use J_{k-2} = (J_k - p J_{k-1}) / q.
inline Rational horadam(const HoradamParams& params, std::int64_t n) {
  params.validate();
  const Rational p(params.p);
  const Rational q(params.q);
  Rational prev(params.a);  // J_k
  Rational cur(params.b);   // J_{k+1}
  if (n >= 0) {
    for (std::int64_t k = 0; k < n; ++k) {
      Rational next = p * cur + q * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return prev;
  }
  // Walk down: (J_{k}, J_{k+1}) -> (J_{k-1}, J_k).
  for (std::int64_t k = 0; k > n; --k) {
    Rational lower = (cur - p * prev) / q;
    cur = std::move(prev);
    prev = std::move(lower);
  }
  return prev;
}

inline Rational fib(const Integer& p, const Integer& q, std::int64_t n) {
  return horadam(HoradamParams::fibonacci(p, q), n);
}

inline Rational lucas(const Integer& p, const Integer& q, std::int64_t n) {
  return horadam(HoradamParams::lucas(p, q), n);
}

namespace detail {

struct Matrix2 {
  std::array<Rational, 4> m;  // row-major

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {{x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
             x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]}};
  }
};

}  // namespace detail

/**
 * J_n by binary powering of the companion matrix [[p, q], [1, 0]] (or its
 * inverse [[0, 1], [1/q, -p/q]] for n < 0). O(log |n|) matrix products;
 * returns exactly the value of horadam().
 */
inline Rational horadam_fast(const HoradamParams& params, std::int64_t n) {
  params.validate();
  const Rational p(params.p);
  const Rational q(params.q);
  detail::Matrix2 base = n >= 0 ? detail::Matrix2{{p, q, Rational(1), Rational(0)}}
                                : detail::Matrix2{{Rational(0), Rational(1), q.reciprocal(), -p / q}};
  detail::Matrix2 acc{{Rational(1), Rational(0), Rational(0), Rational(1)}};
  auto e = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1U;
  while (e != 0) {
    if ((e & 1U) != 0) {
      acc = acc * base;
    }
    e >>= 1U;
    if (e != 0) {
      base = base * base;
    }
  }
  // (J_{n+1}, J_n) = M^n (J_1, J_0)
  return acc.m[2] * Rational(params.b) + acc.m[3] * Rational(params.a);
}

/// (X_n, X_{n+1}, X_{n+2}, X_{n+3}) for the selected scalar sequence X.
inline HybridNumber<Rational> hybrid_seq(const HoradamParams& params, SeqKind kind, std::int64_t n) {
  const HoradamParams eff = effective_params(params, kind);
  eff.validate();
  Rational x0 = horadam(eff, n);
  Rational x1 = horadam(eff, n + 1);
  const Rational p(eff.p);
  const Rational q(eff.q);
  Rational x2 = p * x1 + q * x0;
  Rational x3 = p * x2 + q * x1;
  return {std::move(x0), std::move(x1), std::move(x2), std::move(x3)};
}

/**
 * Memoized two-sided sequence for one parameter set. Values are produced by
 * extending a contiguous window [lo, hi] of the recurrence in either
 * direction. Single-owner: not safe for concurrent use.
 */
class SeqCache {
 public:
  explicit SeqCache(HoradamParams params) : params_(std::move(params)), p_(0), q_(1) {
    params_.validate();
    p_ = Rational(params_.p);
    q_ = Rational(params_.q);
    memo_.emplace(0, Rational(params_.a));
    memo_.emplace(1, Rational(params_.b));
  }

  [[nodiscard]] const HoradamParams& params() const { return params_; }

  const Rational& operator()(std::int64_t n) {
    while (hi() < n) {
      const std::int64_t k = hi() + 1;
      memo_.emplace(k, p_ * memo_.at(k - 1) + q_ * memo_.at(k - 2));
    }
    while (lo() > n) {
      const std::int64_t k = lo() - 1;
      memo_.emplace(k, (memo_.at(k + 2) - p_ * memo_.at(k + 1)) / q_);
    }
    return memo_.at(n);
  }

  HybridNumber<Rational> hybrid(std::int64_t n) {
    return {(*this)(n), (*this)(n + 1), (*this)(n + 2), (*this)(n + 3)};
  }

  [[nodiscard]] const std::map<std::int64_t, Rational>& memo() const { return memo_; }

 private:
  [[nodiscard]] std::int64_t lo() const { return memo_.begin()->first; }
  [[nodiscard]] std::int64_t hi() const { return memo_.rbegin()->first; }

  HoradamParams params_;
  Rational p_;
  Rational q_;
  std::map<std::int64_t, Rational> memo_;
};

struct ScalarIdentityCheck {
  std::string identity;
  std::int64_t index;
  Rational lhs;
  Rational rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct ScalarIdentityReport {
  HoradamParams params;
  std::vector<ScalarIdentityCheck> checks;

  [[nodiscard]] std::optional<ScalarIdentityCheck> first_failure() const {
    for (const auto& c : checks) {
      if (!c.holds()) return c;
    }
    return std::nullopt;
  }
  [[nodiscard]] bool all_pass() const { return !first_failure().has_value(); }
};

/**
 * Audits the scalar identities the hybrid identity proofs lean on, for
 * r in [0, rmax]:
 *   F_{2r} = F_r L_r
 *   (p^2 + 4q) F_r^2 = L_{2r} - 2(-q)^r
 *   F_{-r} = -(-q)^{-r} F_r
 *   L_r = alpha^r + beta^r          (projected from Q[s])
 * and for n in [1, pow_max]:
 *   alpha^n = F_n alpha + q F_{n-1}  (compared in Q[s])
 * Failures are report entries, never exceptions.
 */
inline ScalarIdentityReport verify_scalar_identities(const HoradamParams& params, std::int64_t rmax,
                                                     std::int64_t pow_max = 0) {
  params.validate();
  ScalarIdentityReport report{params, {}};
  SeqCache f(HoradamParams::fibonacci(params.p, params.q));
  SeqCache l(HoradamParams::lucas(params.p, params.q));
  const Rational d(params.discriminant());
  const Rational minus_q(-params.q);
  const Rational q(params.q);
  const auto [alpha, beta] = characteristic_roots(params.p, params.q);

  for (std::int64_t r = 0; r <= rmax; ++r) {
    report.checks.push_back({"F_2r = F_r L_r", r, f(2 * r), f(r) * l(r)});
    report.checks.push_back({"D F_r^2 = L_2r - 2(-q)^r", r, d * f(r) * f(r), l(2 * r) - 2 * minus_q.pow(r)});
    report.checks.push_back({"F_-r = -(-q)^-r F_r", r, f(-r), -minus_q.pow(-r) * f(r)});
    const QuadExt sum = alpha.pow(r) + beta.pow(r);
    report.checks.push_back({"L_r = alpha^r + beta^r", r, l(r), sum.x()});
    report.checks.push_back({"L_r = alpha^r + beta^r (s-part)", r, Rational(0), sum.y()});
  }
  for (std::int64_t n = 1; n <= pow_max; ++n) {
    const QuadExt power = alpha.pow(n);
    const QuadExt reduced = alpha * f(n) + QuadExt::scalar(q * f(n - 1), alpha.discriminant());
    // One check per Q[s] coordinate.
    report.checks.push_back({"alpha^n = F_n alpha + q F_{n-1} (x)", n, power.x(), reduced.x()});
    report.checks.push_back({"alpha^n = F_n alpha + q F_{n-1} (s)", n, power.y(), reduced.y()});
  }
  return report;
}

}  // namespace hybrid

#endif  // HYBRID_SEQUENCES_HPP
