#include <gtest/gtest.h>

#include <random>

#include "rsconcat/rs.hpp"

namespace rsconcat {
namespace {

// Minimum weight over all nonzero codewords by enumerating every message.
int exhaustive_distance(const RsCode& c) {
  const auto q = c.field().order();
  const int k = c.dimension();
  int best = c.length() + 1;
  FieldVector msg(static_cast<std::size_t>(k));
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rem = idx;
    for (auto& e : msg) {
      e = Element{static_cast<std::uint32_t>(rem % q)};
      rem /= q;
    }
    const auto cw = c.encode(msg);
    int w = 0;
    for (Element e : cw) w += !e.is_zero();
    best = std::min(best, w);
  }
  return best;
}

TEST(RsTest, GF4PairWithKOne) {
  const Field f(2);
  const auto pair = build_rs_pair(f, 1);
  EXPECT_EQ(pair.code.length(), 3);
  EXPECT_EQ(pair.code.dimension(), 1);
  EXPECT_EQ(pair.dual.dimension(), 2);
  EXPECT_EQ(exhaustive_distance(pair.code), 3);
  EXPECT_EQ(exhaustive_distance(pair.dual), 2);
  EXPECT_TRUE(pair.warning.empty());
}

TEST(RsTest, KZeroIsDegenerateWithWarning) {
  const Field f(4);
  const auto pair = build_rs_pair(f, 0);
  EXPECT_EQ(pair.code.dimension(), 0);
  EXPECT_EQ(pair.dual.dimension(), 15);
  EXPECT_FALSE(pair.warning.empty());
  EXPECT_TRUE(pair.code.contains(FieldVector(15)));
  FieldVector e(15);
  e[3] = f.one();
  EXPECT_FALSE(pair.code.contains(e));
  EXPECT_TRUE(pair.dual.contains(e));
}

TEST(RsTest, RejectsKOutOfRange) {
  const Field f(2);
  EXPECT_THROW(build_rs_pair(f, 2), std::invalid_argument);
  EXPECT_THROW(build_rs_pair(f, -1), std::invalid_argument);
  EXPECT_NO_THROW(build_rs_pair(Field(4), 7));
  EXPECT_THROW(build_rs_pair(Field(4), 8), std::invalid_argument);
}

TEST(RsTest, GF16KSevenIsDualPairWithContainment) {
  const Field f(4);
  const auto pair = build_rs_pair(f, 7);
  EXPECT_EQ(pair.code.dimension() + pair.dual.dimension(), 15);
  for (const auto& r : pair.code.generator()) {
    EXPECT_TRUE(pair.dual.contains(r));
    for (const auto& d : pair.dual.generator()) EXPECT_TRUE(dot(f, r, d).is_zero());
  }
  // Dual of dimension 8 has distance K+1 = 8; R itself has 9 (16^7 messages
  // is out of reach, so sample).
  std::mt19937_64 rng(1);
  for (const auto* code : {&pair.code, &pair.dual}) {
    const int bound = code == &pair.code ? 9 : 8;
    FieldVector msg(static_cast<std::size_t>(code->dimension()));
    for (int trial = 0; trial < 100000; ++trial) {
      bool nonzero = false;
      for (auto& e : msg) {
        e = Element{static_cast<std::uint32_t>(rng() % 16)};
        nonzero |= !e.is_zero();
      }
      if (!nonzero) continue;
      int w = 0;
      for (Element e : code->encode(msg)) w += !e.is_zero();
      ASSERT_GE(w, bound);
    }
  }
}

TEST(RsTest, EncodeMatchesEvaluation) {
  const Field f(2);
  const auto pair = build_rs_pair(f, 1);
  // R is spanned by x^1: the single generator evaluates x at alpha^i.
  const Element w = f.alpha();
  const FieldVector expected{f.one(), w, f.mul(w, w)};
  EXPECT_EQ(pair.code.encode(FieldVector{f.one()}), expected);
  EXPECT_EQ(pair.code.encode(FieldVector{Element{0}}), FieldVector(3));
  EXPECT_THROW(pair.code.encode(FieldVector{}), std::invalid_argument);
  // Unit messages give generator rows.
  FieldVector unit(2);
  unit[1] = f.one();
  EXPECT_EQ(pair.dual.encode(unit), pair.dual.generator()[1]);
}

TEST(RsTest, ContainsSeparatesCodeFromDual) {
  const Field f(2);
  const auto pair = build_rs_pair(f, 1);
  const FieldVector ones{f.one(), f.one(), f.one()};
  EXPECT_FALSE(pair.code.contains(ones));
  EXPECT_TRUE(pair.dual.contains(ones));
  for (const auto& g : pair.code.generator()) EXPECT_TRUE(pair.code.contains(g));
  EXPECT_TRUE(pair.code.contains(FieldVector(3)));
}

TEST(RsTest, NestingIsMonotoneInK) {
  const Field f(4);
  for (int K = 0; K < 7; ++K) {
    const auto small = build_rs_pair(f, K);
    const auto large = build_rs_pair(f, K + 1);
    for (const auto& r : small.code.generator()) EXPECT_TRUE(large.code.contains(r));
  }
}

TEST(RsTest, SingletonTightnessOverGF4) {
  const Field f(2);
  for (int K = 0; K <= 1; ++K) {
    const auto pair = build_rs_pair(f, K);
    if (K > 0) EXPECT_EQ(exhaustive_distance(pair.code), 3 - K + 1);
    EXPECT_EQ(exhaustive_distance(pair.dual), K + 1);
  }
}

TEST(CssTest, GeneratorCountsAndShape) {
  const Field f(2);
  const auto pair = build_rs_pair(f, 1);
  const auto css = css_generators(pair.code, pair.dual);
  EXPECT_EQ(css.s_gens.size(), 2u);
  EXPECT_EQ(css.n_gens.size(), 4u);
  for (const auto& g : css.s_gens) EXPECT_EQ(g.size(), 6u);

  const auto zero = build_rs_pair(f, 0);
  const auto degenerate = css_generators(zero.code, zero.dual);
  EXPECT_TRUE(degenerate.s_gens.empty());
  EXPECT_EQ(degenerate.n_gens.size(), 6u);
}

TEST(CssTest, StabilizerOrthogonalToNormalizerOverField) {
  for (int K : {0, 1, 3, 7}) {
    const Field f(4);
    const auto pair = build_rs_pair(f, K);
    const auto css = css_generators(pair.code, pair.dual);
    for (const auto& s : css.s_gens)
      for (const auto& n : css.n_gens) ASSERT_TRUE(symplectic_pairing(f, s, n).is_zero());
  }
}

TEST(CssTest, RejectsPairWithoutContainment) {
  const Field f(4);
  const RsCode big(f, 0, 10);
  const RsCode small(f, 0, 5);
  EXPECT_THROW(css_generators(big, small), std::invalid_argument);
}

}  // namespace
}  // namespace rsconcat
