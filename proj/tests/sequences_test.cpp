#include "hybrid/sequences.hpp"

#include <chrono>

#include "gtest/gtest.h"

#include "oracle.hpp"

namespace hybrid {
namespace {

using oracle::hyb;

int as_int(const Integer& v) { return v.convert_to<int>(); }

TEST(SequencesTest, ScalarExamples) {
  EXPECT_EQ(horadam({1, 1, 0, 1}, 10), Rational(55));
  EXPECT_EQ(horadam({3, -2, 7, 4}, 0), Rational(7));
  EXPECT_EQ(horadam({1, 1, 0, 1}, -1), Rational(1));
  EXPECT_EQ(fib(2, 3, -1), Rational(1, 3));  // F_{-1} = 1/q
  const int expected_fib[] = {0, 1, 1, 2, 3, 5, 8, 13};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(fib(1, 1, n), Rational(expected_fib[n]));
  const int expected_lucas[] = {2, 1, 3, 4};
  for (int n = 0; n < 4; ++n) EXPECT_EQ(lucas(1, 1, n), Rational(expected_lucas[n]));
  for (const auto& params : oracle::default_grid()) {
    EXPECT_EQ(lucas(params.p, params.q, 1), Rational(params.p));
  }
}

TEST(SequencesTest, FastPathExamples) {
  EXPECT_EQ(horadam_fast({1, 1, 0, 1}, 40), Rational(102334155));
  EXPECT_EQ(horadam_fast({3, 2, 5, 9}, 1), Rational(9));
  EXPECT_EQ(horadam_fast({2, 1, 0, 1}, 8), Rational(408));
}

TEST(SequencesTest, InvalidParamsRejected) {
  EXPECT_THROW((void)horadam({1, 0, 0, 1}, 3), InvalidParams);
  EXPECT_THROW((void)horadam({2, -1, 0, 1}, 3), InvalidParams);
  EXPECT_THROW((void)horadam_fast({1, 0, 0, 1}, 3), InvalidParams);
  EXPECT_THROW(SeqCache({4, -4, 0, 1}), InvalidParams);
}

TEST(SequencesTest, MatchesNaiveOracleAndTwoSidedRecurrence) {
  for (const auto& params : oracle::default_grid()) {
    const oracle::NaiveSequence naive(as_int(params.p), as_int(params.q), as_int(params.a), as_int(params.b), -8, 42);
    const Rational p(params.p);
    const Rational q(params.q);
    for (std::int64_t n = -8; n <= 40; ++n) {
      ASSERT_EQ(horadam(params, n), naive[n]);
      ASSERT_EQ(p * horadam(params, n + 1) + q * horadam(params, n), horadam(params, n + 2));
    }
  }
}

TEST(SequencesTest, FastPathAgreesWithRecurrence) {
  for (const auto& params : oracle::default_grid()) {
    SeqCache cache(params);
    for (std::int64_t n = -8; n <= 120; ++n) {
      ASSERT_EQ(horadam_fast(params, n), cache(n)) << "n=" << n;
    }
    EXPECT_EQ(horadam_fast(params, 500), horadam(params, 500));
    EXPECT_EQ(horadam_fast(params, -8), horadam(params, -8));
  }
}

TEST(SequencesTest, HybridBlocks) {
  const HoradamParams fibs{1, 1, 0, 1};
  EXPECT_EQ(hybrid_seq(fibs, SeqKind::fib, 0), hyb(0, 1, 1, 2));
  EXPECT_EQ(hybrid_seq(fibs, SeqKind::fib, 1), hyb(1, 1, 2, 3));
  EXPECT_EQ(hybrid_seq(fibs, SeqKind::lucas, 0), hyb(2, 1, 3, 4));
  for (const auto& params : oracle::default_grid()) {
    const Integer& p = params.p;
    const Integer& q = params.q;
    const Integer& a = params.a;
    const Integer& b = params.b;
    const HybridNumber<Rational> hj0{Rational(a), Rational(b), Rational(Integer(p * b + q * a)),
                                     Rational(Integer((p * p + q) * b + p * q * a))};
    EXPECT_EQ(hybrid_seq(params, SeqKind::horadam, 0), hj0);
  }
}

TEST(SequencesTest, HybridRecurrence) {
  for (const auto& params : oracle::default_grid()) {
    for (const SeqKind kind : {SeqKind::fib, SeqKind::lucas, SeqKind::horadam}) {
      for (std::int64_t n = -6; n <= 40; ++n) {
        const auto next = hybrid_seq(params, kind, n + 1);
        const auto expected = scale(hybrid_seq(params, kind, n), Rational(params.p)) +
                              scale(hybrid_seq(params, kind, n - 1), Rational(params.q));
        ASSERT_EQ(next, expected);
      }
    }
  }
}

TEST(SequencesTest, SpecializationsAgree) {
  for (const auto& params : oracle::default_grid()) {
    for (std::int64_t n = -5; n <= 20; ++n) {
      EXPECT_EQ(horadam({params.p, params.q, 0, 1}, n), fib(params.p, params.q, n));
      EXPECT_EQ(horadam({params.p, params.q, 2, params.p}, n), lucas(params.p, params.q, n));
      EXPECT_EQ(hybrid_seq(params, SeqKind::fib, n), hybrid_seq({params.p, params.q, 0, 1}, SeqKind::horadam, n));
    }
  }
}

TEST(SequencesTest, UnitQGivesIntegerNegativeTerms) {
  for (const auto& params : oracle::default_grid()) {
    if (params.q != 1 && params.q != -1) continue;
    for (std::int64_t n = -30; n < 0; ++n) {
      EXPECT_TRUE(horadam(params, n).is_integer()) << "n=" << n;
    }
  }
  EXPECT_FALSE(fib(1, 2, -1).is_integer());
}

TEST(SequencesTest, CacheValuesSatisfyRecurrence) {
  SeqCache cache({3, -2, 2, 3});
  (void)cache(25);
  (void)cache(-10);
  (void)cache(3);
  const auto& memo = cache.memo();
  EXPECT_EQ(memo.begin()->first, -10);
  EXPECT_EQ(memo.rbegin()->first, 25);
  for (std::int64_t n = -10; n + 2 <= 25; ++n) {
    EXPECT_EQ(memo.at(n + 2), Rational(3) * memo.at(n + 1) + Rational(-2) * memo.at(n));
  }
  EXPECT_EQ(cache.hybrid(-3), hybrid_seq({3, -2, 2, 3}, SeqKind::horadam, -3));
}

TEST(SequencesTest, ScalarIdentityExamples) {
  const auto golden = verify_scalar_identities({1, 1, 0, 1}, 3);
  ASSERT_TRUE(golden.all_pass());
  // F_6 = 8 = F_3 L_3 = 2 * 4
  const auto& c = golden.checks[3 * 5];
  EXPECT_EQ(c.identity, "F_2r = F_r L_r");
  EXPECT_EQ(c.index, 3);
  EXPECT_EQ(c.lhs, Rational(8));

  const auto zero = verify_scalar_identities({1, 1, 0, 1}, 0);
  EXPECT_TRUE(zero.all_pass());
  EXPECT_EQ(zero.checks[1].lhs, Rational(0));

  EXPECT_TRUE(verify_scalar_identities({3, -1, 0, 1}, 2).all_pass());
}

TEST(SequencesTest, ScalarIdentitiesOnGrid) {
  for (const auto& params : oracle::default_grid()) {
    const auto report = verify_scalar_identities(params, 12, 30);
    const auto failure = report.first_failure();
    EXPECT_FALSE(failure.has_value()) << (failure ? failure->identity : "");
  }
}

}  // namespace
}  // namespace hybrid
