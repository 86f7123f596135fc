#include "hybrid/hybrid_number.hpp"

#include <random>

#include "gtest/gtest.h"

#include "oracle.hpp"

namespace hybrid {
namespace {

using oracle::hyb;
using H = HybridNumber<Rational>;

TEST(HybridNumberTest, BasisTableMatchesTranscription) {
  const BasisTable table = basis_table();
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      const auto& cell = table[row][col];
      const auto& expected = oracle::kTable[row][col];
      EXPECT_EQ(cell.scalar, expected[0]) << row << "," << col;
      EXPECT_EQ(cell.i, expected[1]) << row << "," << col;
      EXPECT_EQ(cell.eps, expected[2]) << row << "," << col;
      EXPECT_EQ(cell.h, expected[3]) << row << "," << col;
    }
  }
}

TEST(HybridNumberTest, UnitRelations) {
  const H one = H::unit(Basis::one);
  const H i = H::unit(Basis::i);
  const H e = H::unit(Basis::eps);
  const H h = H::unit(Basis::h);
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(e * e, H::zero());
  EXPECT_EQ(h * h, one);
  EXPECT_EQ(i * h, e + i);
  EXPECT_EQ(h * i, -(e + i));
  EXPECT_EQ(i * e, hyb(1, 0, 0, -1));
  EXPECT_EQ(e * i, hyb(1, 0, 0, 1));
  EXPECT_NE(i * e, e * i);
}

TEST(HybridNumberTest, ProductMatchesTableExpansion) {
  EXPECT_EQ(hyb(1, 1, 2, 3) * hyb(0, 1, 1, 2), hyb(8, 0, -1, 3));
  EXPECT_EQ(oracle::mul(hyb(1, 1, 2, 3), hyb(0, 1, 1, 2)), hyb(8, 0, -1, 3));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const H z = oracle::random_hybrid(rng);
    const H w = oracle::random_hybrid(rng);
    ASSERT_EQ(z * w, oracle::mul(z, w));
  }
}

TEST(HybridNumberTest, AdditiveOperations) {
  EXPECT_EQ(hyb(0, 1, 1, 2) + hyb(1, 1, 2, 3), hyb(1, 2, 3, 5));
  EXPECT_EQ(-hyb(1, 0, 0, -1), hyb(-1, 0, 0, 1));
  EXPECT_EQ(scale(hyb(1, 1, 2, 3), Rational(2)), hyb(2, 2, 4, 6));
  EXPECT_EQ(hyb(1, 2, 3, 5) - hyb(1, 1, 2, 3), hyb(0, 1, 1, 2));
}

TEST(HybridNumberTest, Conjugate) {
  EXPECT_EQ(conjugate(hyb(1, 2, 3, 4)), hyb(1, -2, -3, -4));
  EXPECT_EQ(conjugate(conjugate(hyb(0, 1, 1, 2))), hyb(0, 1, 1, 2));
  EXPECT_EQ(conjugate(hyb(1, 1, 0, 0) + hyb(0, 0, 1, 1)), conjugate(hyb(1, 1, 0, 0)) + conjugate(hyb(0, 0, 1, 1)));
}

TEST(HybridNumberTest, ConjugationReversesBasisProducts) {
  for (const Basis x : kBasis) {
    for (const Basis y : kBasis) {
      const H u = H::unit(x);
      const H v = H::unit(y);
      EXPECT_EQ(conjugate(u * v), conjugate(v) * conjugate(u));
    }
  }
}

TEST(HybridNumberTest, Character) {
  EXPECT_EQ(character(hyb(0, 0, 1, 0)), Rational(0));
  EXPECT_EQ(character(hyb(1, 0, 0, 0)), Rational(1));
  EXPECT_EQ(character(hyb(0, 0, 0, 1)), Rational(-1));
  EXPECT_EQ(character(hyb(0, 2, 1, 1)), Rational(-1));
}

TEST(HybridNumberTest, Norm) {
  const Norm real = norm(hyb(2, 0, 0, 0));
  EXPECT_DOUBLE_EQ(real.value, 2.0);
  EXPECT_EQ(real.kind, NormClass::positive);
  const Norm dual = norm(hyb(0, 0, 1, 0));
  EXPECT_DOUBLE_EQ(dual.value, 0.0);
  EXPECT_EQ(dual.kind, NormClass::null);
  const Norm hyperbolic = norm(hyb(0, 0, 0, 1));
  EXPECT_DOUBLE_EQ(hyperbolic.value, 1.0);
  EXPECT_EQ(hyperbolic.kind, NormClass::negative);
}

TEST(HybridNumberTest, Commutator) {
  EXPECT_EQ(commutator(hyb(1, 2, 3, 4), hyb(1, 2, 3, 4)), H::zero());
  EXPECT_EQ(commutator(H::unit(Basis::i), H::unit(Basis::eps)), hyb(0, 0, 0, -2));
  EXPECT_EQ(commutator(hyb(1, 1, 2, 3), hyb(0, 1, 1, 2)), hyb(0, -2, -4, 2));
}

TEST(HybridNumberTest, AlgebraLawsOnRandomValues) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const H z = oracle::random_hybrid(rng);
    const H w = oracle::random_hybrid(rng);
    const H v = oracle::random_hybrid(rng);
    const Rational k = oracle::random_rational(rng);
    ASSERT_EQ((z * w) * v, z * (w * v));
    ASSERT_EQ(z * (w + v), z * w + z * v);
    ASSERT_EQ((z + w) * v, z * v + w * v);
    ASSERT_EQ(scale(z, k) * w, scale(z * w, k));
    ASSERT_EQ(z * scale(w, k), scale(z * w, k));
    const H c{character(z), 0, 0, 0};
    ASSERT_EQ(z * conjugate(z), c);
    ASSERT_EQ(conjugate(z) * z, c);
    ASSERT_EQ(conjugate(z * w), conjugate(w) * conjugate(z));
    ASSERT_EQ(character(z * w), character(z) * character(w));
  }
}

TEST(HybridNumberTest, WorksOverQuadraticExtension) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto z = lift(oracle::random_hybrid(rng), 5);
    const auto w = lift(oracle::random_hybrid(rng), 5);
    const auto s = scale(lift(oracle::random_hybrid(rng), 5), QuadExt::root(5));
    ASSERT_EQ((z * w) * s, z * (w * s));
    ASSERT_EQ(project(z * w), project(z) * project(w));
  }
  EXPECT_THROW((void)project(scale(lift(hyb(1, 0, 0, 0), 5), QuadExt::root(5))), IrrationalResidue);
}

TEST(HybridNumberTest, FormatsTableCells) {
  const BasisTable t = basis_table();
  EXPECT_EQ(format_unit_product(t[1][2]), "1-h");
  EXPECT_EQ(format_unit_product(t[2][2]), "0");
  EXPECT_EQ(format_unit_product(t[3][1]), "-(ε+i)");
  EXPECT_EQ(format_unit_product(t[1][3]), "ε+i");
  EXPECT_EQ(format_unit_product(t[2][3]), "-ε");
  EXPECT_EQ(format_unit_product(t[2][1]), "1+h");
  EXPECT_EQ(format_unit_product(t[1][1]), "-1");
  EXPECT_EQ(format_unit_product(t[0][0]), "1");
}

}  // namespace
}  // namespace hybrid
