#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsconcat/concat.hpp"

namespace rsconcat {
namespace {

Expander make_expander(int m) {
  const Field f(2 * m);
  return Expander(f, find_self_dual_basis(f));
}

// The expansion written out index by index from the defining equations,
// with 1-based j and coordinates taken as Tr(x beta_j).
BlockBits reference_block(const Field& f, const SelfDualBasis& B, int i, Element ai, Element ani,
                          std::uint32_t s, std::uint32_t t) {
  const int m = f.degree() / 2;
  auto beta = [&](int j) { return B[static_cast<std::size_t>(j - 1)]; };
  auto coord = [&](Element x, int j) { return f.trace(f.mul(x, beta(j))); };
  auto sb = [&](int j) { return static_cast<int>((s >> (j - 1)) & 1u); };
  auto tb = [&](int j) { return static_cast<int>((t >> (j - 1)) & 1u); };
  auto a = [&](int j) { return coord(ai, j); };
  auto an = [&](int j) { return coord(ani, j); };
  auto scale = [&](int bit, int j) { return bit ? beta(j) : Element{0}; };

  Element x1 = scale(an(1) ^ sb(m + 1), 1);
  Element x2 = scale(an(m + 1) ^ tb(m + 1), 1);
  for (int j = 2; j <= m; ++j) {
    x1 += scale(an(j), j);
    x2 += scale(an(m + j), j);
  }
  for (int j = m + 1; j <= 2 * m; ++j) {
    x1 += scale(sb(j - m), j);
    x2 += scale(tb(j - m), j);
  }
  Element y1 = scale(sb(m + 1), m + 1);
  Element y2 = scale(tb(m + 1), m + 1);
  for (int j = 1; j <= m; ++j) {
    y1 += scale(a(j), j);
    y2 += scale(a(m + j), j);
  }
  const Element down = f.pow(f.alpha(), -i);
  const Element up = f.pow(f.alpha(), i);
  BlockBits out;
  auto put = [](std::uint64_t& word, int j, int bit) { word |= static_cast<std::uint64_t>(bit) << (j - 1); };
  for (int j = 1; j <= 2 * m; ++j) {
    put(out.b, j, coord(f.mul(down, x1), j));
    put(out.b, 2 * m + 1 + j, coord(f.mul(down, x2), j));
    put(out.c, j, coord(f.mul(up, y1), j));
    put(out.c, 2 * m + 1 + j, coord(f.mul(up, y2), j));
  }
  put(out.b, 2 * m + 1, a(1) ^ sb(1));
  put(out.b, 4 * m + 2, a(m + 1) ^ tb(1));
  put(out.c, 2 * m + 1, sb(m + 1));
  put(out.c, 4 * m + 2, tb(m + 1));
  return out;
}

TEST(ExpandBlockTest, ZeroInputGivesZeroBlock) {
  const auto ex = make_expander(2);
  for (int i = 0; i < ex.blocks(); ++i) EXPECT_EQ(ex.expand_block(i, {}, {}, 0, 0), BlockBits{});
}

TEST(ExpandBlockTest, HandEvaluatedExamplesAtMOne) {
  const auto ex = make_expander(1);
  const auto& f = ex.field();
  const auto& B = ex.basis();
  // s_{0,1} = 1: b_{0,1..2} = coords(beta_2) = (0,1), b_{0,3} = 1, c = 0.
  const auto blk = ex.expand_block(0, {}, {}, 0b01, 0);
  EXPECT_EQ(blk.b, 0b110u);
  EXPECT_EQ(blk.c, 0u);
  // a_0 = w has coords (1,0): c_{0,1..2} = coords(beta_1) = (1,0), c_{0,3} = 0,
  // and b_{0,3} = a_{0,1} = 1.
  ASSERT_EQ(B.coords(f.alpha()), 0b01u);
  const auto blk2 = ex.expand_block(0, f.alpha(), {}, 0, 0);
  EXPECT_EQ(blk2.c & 0b111u, 0b001u);
  EXPECT_EQ(blk2.b, 0b100u);
}

TEST(ExpandBlockTest, MatchesReferenceEquations) {
  std::mt19937_64 rng(17);
  for (int m = 1; m <= 3; ++m) {
    const auto ex = make_expander(m);
    const auto& f = ex.field();
    for (int trial = 0; trial < 3000; ++trial) {
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(ex.blocks()));
      const Element ai{static_cast<std::uint32_t>(rng() % f.order())};
      const Element ani{static_cast<std::uint32_t>(rng() % f.order())};
      const auto s = static_cast<std::uint32_t>(rng() % (2u << m));
      const auto t = static_cast<std::uint32_t>(rng() % (2u << m));
      ASSERT_EQ(ex.expand_block(i, ai, ani, s, t), reference_block(f, ex.basis(), i, ai, ani, s, t))
          << "m=" << m << " i=" << i;
    }
  }
}

TEST(ExpandCodewordTest, LengthAndLinearity) {
  std::mt19937_64 rng(23);
  for (int m = 1; m <= 3; ++m) {
    const auto ex = make_expander(m);
    const auto n = static_cast<std::size_t>(ex.blocks());
    auto random_input = [&] {
      ExpansionInput in{FieldVector(2 * n), std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
      for (auto& e : in.a) e = Element{static_cast<std::uint32_t>(rng() % ex.field().order())};
      for (auto& v : in.s) v = static_cast<std::uint32_t>(rng() % (2u << m));
      for (auto& v : in.t) v = static_cast<std::uint32_t>(rng() % (2u << m));
      return in;
    };
    const ExpansionInput zero{FieldVector(2 * n), std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n)};
    EXPECT_TRUE(ex.expand_codeword(zero).is_zero());
    const int trials = m == 3 ? 2000 : 10000;
    for (int trial = 0; trial < trials; ++trial) {
      const auto x = random_input();
      const auto y = random_input();
      ExpansionInput sum = x;
      for (std::size_t p = 0; p < sum.a.size(); ++p) sum.a[p] += y.a[p];
      for (std::size_t i = 0; i < n; ++i) {
        sum.s[i] ^= y.s[i];
        sum.t[i] ^= y.t[i];
      }
      ASSERT_EQ(ex.expand_codeword(sum), ex.expand_codeword(x) ^ ex.expand_codeword(y));
    }
  }
  const auto ex1 = make_expander(1);
  EXPECT_EQ(ex1.qubits(), 18);
  ExpansionInput bad{FieldVector(5), std::vector<std::uint32_t>(3), std::vector<std::uint32_t>(3)};
  EXPECT_THROW(ex1.expand_codeword(bad), std::invalid_argument);
}

TEST(BuildCodeTest, ParameterExamples) {
  struct Case { int m, K, n, k, rank_s, rank_n; };
  for (const auto& c : {Case{1, 1, 18, 2, 16, 20}, Case{1, 0, 18, 6, 12, 24}, Case{2, 3, 150, 36, 114, 186}}) {
    const auto code = build_code(c.m, c.K);
    EXPECT_EQ(code.params.n, c.n);
    EXPECT_EQ(code.params.k, c.k);
    EXPECT_EQ(static_cast<int>(code.s_matrix.size()), c.rank_s);
    EXPECT_EQ(static_cast<int>(code.n_matrix.size()), c.rank_n);
    EXPECT_EQ(oracle::rank(oracle::to_rows(code.s_matrix)), c.rank_s);
    EXPECT_EQ(oracle::rank(oracle::to_rows(code.n_matrix)), c.rank_n);
  }
  EXPECT_FALSE(build_code(1, 0).warning.empty());
}

TEST(BuildCodeTest, RankFormulasAndContainmentForAllK) {
  for (int m = 1; m <= 2; ++m) {
    const int N = (1 << (2 * m)) - 1;
    for (int K = 0; K <= N / 2; ++K) {
      const auto code = build_code(m, K);
      const auto& p = code.params;
      EXPECT_EQ(static_cast<int>(code.s_matrix.size()), 2 * N * (m + 1) + 4 * m * K);
      EXPECT_EQ(static_cast<int>(code.n_matrix.size()), 2 * p.n - p.rank_s());
      EXPECT_EQ(static_cast<int>(code.n_matrix.size() - code.s_matrix.size()), 2 * p.k);
      const auto rn = row_reduce(code.n_matrix);
      for (const auto& r : code.s_matrix.rows) ASSERT_TRUE(in_span(rn, r));
    }
  }
}

TEST(BuildCodeTest, RejectsInvalidParameters) {
  EXPECT_THROW(build_code(1, 2), std::invalid_argument);
  EXPECT_THROW(build_code(0, 0), std::invalid_argument);
  EXPECT_THROW(build_code(2, -1), std::invalid_argument);
  const Field odd(3);
  EXPECT_THROW(Expander(odd, find_self_dual_basis(odd)), std::invalid_argument);
}

TEST(QuaternaryTest, SymbolMap) {
  EXPECT_EQ(to_quaternary(SymplecticVector(4)).weight(), 0u);
  SymplecticVector x(3);
  x.set_u(1);
  auto q = to_quaternary(x);
  EXPECT_EQ(q.symbols, (std::vector<std::uint8_t>{0, 1, 0}));
  EXPECT_EQ(q.weight(), 1u);
  x.set_v(1);
  q = to_quaternary(x);
  EXPECT_EQ(q.symbols[1], 3);  // 1 + w
  EXPECT_EQ(q.weight(), 1u);
}

TEST(InjectivityTest, EveryBlockAtMOneAndTwo) {
  for (int m = 1; m <= 2; ++m) {
    const auto ex = make_expander(m);
    for (int i = 0; i < ex.blocks(); ++i) EXPECT_TRUE(ex.check_block_injectivity(i)) << "m=" << m << " i=" << i;
  }
}

TEST(InjectivityTest, LinearMapHasFullRank) {
  // Same property by a second route: the images of the 6m+2 unit inputs
  // are linearly independent.
  for (int m = 1; m <= 2; ++m) {
    const auto ex = make_expander(m);
    const int k = 2 * m;
    const int width = ex.block_width();
    for (int i = 0; i < ex.blocks(); ++i) {
      std::vector<oracle::Bits> rows;
      for (int bit = 0; bit < 6 * m + 2; ++bit) {
        const std::uint64_t x = std::uint64_t{1} << bit;
        const auto blk = ex.expand_block(i, {static_cast<std::uint32_t>(x) & ((1u << k) - 1)},
                                         {static_cast<std::uint32_t>(x >> k) & ((1u << k) - 1)},
                                         static_cast<std::uint32_t>(x >> (2 * k)) & ((2u << m) - 1),
                                         static_cast<std::uint32_t>(x >> (2 * k + m + 1)) & ((2u << m) - 1));
        oracle::Bits r(static_cast<std::size_t>(2 * width));
        for (int j = 0; j < width; ++j) {
          r[static_cast<std::size_t>(j)] = (blk.b >> j) & 1u;
          r[static_cast<std::size_t>(width + j)] = (blk.c >> j) & 1u;
        }
        rows.push_back(r);
      }
      EXPECT_EQ(oracle::rank(rows), 6 * m + 2);
    }
  }
}

TEST(InjectivityTest, OverBudgetIsRejected) {
  const auto ex = make_expander(4);  // 6*4+2 = 26 input bits
  EXPECT_THROW(ex.check_block_injectivity(0), std::invalid_argument);
}

}  // namespace
}  // namespace rsconcat
