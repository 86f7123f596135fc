#ifndef HYBRID_BINET_HPP
#define HYBRID_BINET_HPP

#include <cstdint>
#include <utility>

#include "hybrid/hybrid_number.hpp"
#include "hybrid/quad_ext.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

namespace hybrid {

/**
 * Constants of the closed-form evaluation for one parameter set.
 *
 * Everything irrational lives in Q[s]/(s^2 - D) with D = p^2 + 4q, so that
 * alpha - beta = s. The underlined roots are
 *   alphabar = 1 + alpha i + alpha^2 ε + alpha^3 h   (betabar likewise),
 * and the scalars that recur in the product formulas are bound once:
 *   K     = q^3 + pq - q + 1
 *   omega = (1 - p) i - q ε + (p^2 + q + 1) h
 *   r_pq  = -1 + (p/2)(F_6 + 2F_3 - F_2) + q(F_5 + 2F_2 - F_1)
 *   s_pq  = (F_6 + 2F_3 - F_2) / 2
 */
struct BinetContext {
  HoradamParams params;
  Integer discriminant;
  QuadExt alpha;
  QuadExt beta;
  QuadExt sqrt_d;  // alpha - beta
  HybridNumber<QuadExt> alphabar;
  HybridNumber<QuadExt> betabar;
  QuadExt A;  // b - a beta
  QuadExt B;  // b - a alpha
  Rational AB;  // b^2 - pab - qa^2
  Integer K;
  HybridNumber<Rational> omega;
  Rational r_pq;
  Rational s_pq;
  HybridNumber<Rational> hf0;  // HF_0
  HybridNumber<Rational> hl0;  // HL_0
};

namespace detail {

inline HybridNumber<QuadExt> underline(const QuadExt& root) {
  const QuadExt one = QuadExt::scalar(Rational(1), root.discriminant());
  const QuadExt sq = root * root;
  return {one, root, sq, sq * root};
}

}  // namespace detail

inline BinetContext make_context(const HoradamParams& params) {
  params.validate();
  auto [alpha, beta] = characteristic_roots(params.p, params.q);
  const Integer d = params.discriminant();
  const Rational a(params.a);
  const Rational b(params.b);
  const Rational p(params.p);
  const Rational q(params.q);

  QuadExt big_a = QuadExt::scalar(b, d) - beta * a;
  QuadExt big_b = QuadExt::scalar(b, d) - alpha * a;

  const auto f = [&](std::int64_t n) { return fib(params.p, params.q, n); };
  const Rational s_sum = f(6) + 2 * f(3) - f(2);

  BinetContext ctx{
      .params = params,
      .discriminant = d,
      .alpha = alpha,
      .beta = beta,
      .sqrt_d = alpha - beta,
      .alphabar = detail::underline(alpha),
      .betabar = detail::underline(beta),
      .A = std::move(big_a),
      .B = std::move(big_b),
      .AB = b * b - p * a * b - q * a * a,
      .K = params.q * params.q * params.q + params.p * params.q - params.q + 1,
      .omega = {Rational(0), 1 - p, -q, p * p + q + 1},
      .r_pq = -1 + p / 2 * s_sum + q * (f(5) + 2 * f(2) - f(1)),
      .s_pq = s_sum / 2,
      .hf0 = hybrid_seq(params, SeqKind::fib, 0),
      .hl0 = hybrid_seq(params, SeqKind::lucas, 0),
  };
  return ctx;
}

/// (A alphabar alpha^n - B betabar beta^n) / (alpha - beta), kept in Q[s].
inline HybridNumber<QuadExt> binet_closed_form(const BinetContext& ctx, const QuadExt& A, const QuadExt& B,
                                               std::int64_t n) {
  const HybridNumber<QuadExt> num =
      scale(ctx.alphabar, A * ctx.alpha.pow(n)) - scale(ctx.betabar, B * ctx.beta.pow(n));
  const QuadExt inv = ctx.sqrt_d.inverse();
  return scale(num, inv);
}

/// HJ_n from the closed form; throws IrrationalResidue if any component keeps an s-part.
inline HybridNumber<Rational> binet_horadam(const BinetContext& ctx, std::int64_t n) {
  return project(binet_closed_form(ctx, ctx.A, ctx.B, n));
}

/// HF_n: the closed form with A = B = 1.
inline HybridNumber<Rational> binet_fib(const BinetContext& ctx, std::int64_t n) {
  const QuadExt one = QuadExt::scalar(Rational(1), ctx.discriminant);
  return project(binet_closed_form(ctx, one, one, n));
}

/// HL_n = alphabar alpha^n + betabar beta^n (no division).
inline HybridNumber<Rational> binet_lucas(const BinetContext& ctx, std::int64_t n) {
  return project(scale(ctx.alphabar, ctx.alpha.pow(n)) + scale(ctx.betabar, ctx.beta.pow(n)));
}

/// A product computed directly next to its claimed closed form.
struct LemmaCheck {
  HybridNumber<QuadExt> direct;
  HybridNumber<QuadExt> closed_form;
  [[nodiscard]] bool holds() const { return direct == closed_form; }
};

namespace detail {

/// HL_0 - K lifted into Q[s].
inline HybridNumber<QuadExt> lucas_shift(const BinetContext& ctx) {
  return lift(add_scalar(ctx.hl0, -Rational(ctx.K)), ctx.discriminant);
}

/// HF_0 - omega lifted into Q[s].
inline HybridNumber<QuadExt> fib_shift(const BinetContext& ctx) {
  return lift(ctx.hf0 - ctx.omega, ctx.discriminant);
}

inline LemmaCheck product_lemma(const BinetContext& ctx, const HybridNumber<QuadExt>& direct, int sign) {
  const QuadExt coeff = ctx.sqrt_d * Rational(ctx.params.q) * Rational(sign);
  return {direct, lucas_shift(ctx) + scale(fib_shift(ctx), coeff)};
}

inline LemmaCheck square_lemma(const BinetContext& ctx, const HybridNumber<QuadExt>& direct, int sign) {
  const HybridNumber<QuadExt> even = lift(add_scalar(ctx.hl0, ctx.r_pq), ctx.discriminant);
  const HybridNumber<QuadExt> odd = lift(add_scalar(ctx.hf0, ctx.s_pq), ctx.discriminant);
  return {direct, even + scale(odd, ctx.sqrt_d * Rational(sign))};
}

}  // namespace detail

/// alphabar betabar = HL_0 - K + q (alpha - beta)(HF_0 - omega).
inline LemmaCheck product_alphabar_betabar(const BinetContext& ctx) {
  return detail::product_lemma(ctx, ctx.alphabar * ctx.betabar, +1);
}

/// betabar alphabar = HL_0 - K - q (alpha - beta)(HF_0 - omega).
inline LemmaCheck product_betabar_alphabar(const BinetContext& ctx) {
  return detail::product_lemma(ctx, ctx.betabar * ctx.alphabar, -1);
}

/// alphabar betabar + betabar alphabar = 2 (HL_0 - K).
inline LemmaCheck product_sum(const BinetContext& ctx) {
  return {ctx.alphabar * ctx.betabar + ctx.betabar * ctx.alphabar,
          scale(detail::lucas_shift(ctx), Rational(2))};
}

/// alphabar^2 = (HL_0 + r_pq) + (alpha - beta)(HF_0 + s_pq).
inline LemmaCheck alphabar_squared(const BinetContext& ctx) {
  return detail::square_lemma(ctx, ctx.alphabar * ctx.alphabar, +1);
}

/// betabar^2 = (HL_0 + r_pq) - (alpha - beta)(HF_0 + s_pq).
inline LemmaCheck betabar_squared(const BinetContext& ctx) {
  return detail::square_lemma(ctx, ctx.betabar * ctx.betabar, -1);
}

}  // namespace hybrid

#endif  // HYBRID_BINET_HPP
