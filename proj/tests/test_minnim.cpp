#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "grundylab/maxnim.hpp"
#include "grundylab/minnim.hpp"
#include "support/oracles.hpp"

namespace grundylab {
namespace {

using V = std::vector<Natural>;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no grundylab::Error thrown";
  return ErrorCode::kInvalidArgument;
}

const V kMinHalf17{0, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5};

TEST(MinNim, KnownPrefix) {
  EXPECT_EQ(naive_min_grundy(RuleSequence::half(), 17).values, kMinHalf17);
  EXPECT_EQ(fast_min_grundy(RuleSequence::half(), 17).values, kMinHalf17);
  EXPECT_EQ(min_grundy_jumps(RuleSequence::half(), 17), (V{0, 1, 2, 4, 8, 16}));
  EXPECT_EQ(naive_min_grundy(RuleSequence::half(), 6)[5], 3u);
}

TEST(MinNim, SingleTerm) {
  EXPECT_EQ(naive_min_grundy(RuleSequence::sqrt(), 1).values, V{0});
  EXPECT_EQ(fast_min_grundy(RuleSequence::sqrt(), 1).values, V{0});
  EXPECT_EQ(fast_min_grundy(RuleSequence::half(), 1).game, Game::kMinimum);
}

TEST(MinNim, HalfIsFloorLogPlusOne) {
  const GrundyPrefix h = fast_min_grundy(RuleSequence::half(), (1 << 14) + 1);
  for (Natural n = 1; n < h.size(); ++n) {
    ASSERT_EQ(h[n], static_cast<Natural>(std::bit_width(n))) << "n = " << n;
  }
}

TEST(MinNim, AgreesWithOracle) {
  constexpr Natural n = 2048;
  EXPECT_EQ(naive_min_grundy(RuleSequence::half(), n).values,
            oracle::min_nim(oracle::half_values(n), n));
  EXPECT_EQ(naive_min_grundy(RuleSequence::sqrt(), n).values,
            oracle::min_nim(oracle::sqrt_values(n), n));
  EXPECT_EQ(naive_min_grundy(RuleSequence::pow2(), n).values,
            oracle::min_nim(oracle::pow2_values(n), n));
  EXPECT_EQ(fast_min_grundy(RuleSequence::sqrt(), 20).values,
            naive_min_grundy(RuleSequence::sqrt(), 20).values);
}

TEST(MinNim, FastAgreesWithNaiveOnRandomRegularRules) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const V f = oracle::random_regular(rng, 512);
    const RuleSequence rule = RuleSequence::table(f);
    const V expected = oracle::min_nim(f, 512);
    EXPECT_EQ(naive_min_grundy(rule, 512).values, expected);
    EXPECT_EQ(fast_min_grundy(rule, 512).values, expected);
  }
}

TEST(MinNim, FastNeedsRegularRule) {
  try {
    fast_min_grundy(RuleSequence::pow2(), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRegular);
    EXPECT_EQ(e.witness(), Natural{4});
  }
  EXPECT_EQ(code_of([] { naive_min_grundy(RuleSequence::half(), 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(MinNim, HIsRegular) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const GrundyPrefix h = fast_min_grundy(RuleSequence::table(oracle::random_regular(rng, 600)), 600);
    for (Natural n = 1; n < h.size(); ++n) {
      ASSERT_GE(h[n], h[n - 1]);
      ASSERT_LE(h[n] - h[n - 1], 1u);
    }
  }
}

TEST(Q, Examples) {
  EXPECT_EQ(q_of(RuleSequence::half(), 3), 6u);
  EXPECT_EQ(q_of(RuleSequence::half(), 0), 1u);
  EXPECT_EQ(q_of(RuleSequence::sqrt(), 5), 8u);
  for (Natural k = 1; k <= (1 << 13); ++k) ASSERT_EQ(q_of(RuleSequence::half(), k), 2 * k);
}

TEST(Q, MatchesScanOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const V f = oracle::random_regular(rng, 300);
    const RuleSequence rule = RuleSequence::table(f);
    for (Natural k = 0; k < 40; ++k) {
      Natural j = k + 1;
      while (j < f.size() && j - f[j] <= k) ++j;
      if (j < f.size()) {
        EXPECT_EQ(q_of(rule, k), j);
      } else {
        EXPECT_EQ(code_of([&] { q_of(rule, k); }), ErrorCode::kQUndefined);
      }
    }
  }
}

TEST(Q, UndefinedWhenNMinusFStalls) {
  // n - f(n) stays at 1 from n = 1 on.
  const RuleSequence stalled = RuleSequence::table({0, 0, 1, 2, 3, 4});
  EXPECT_EQ(q_of(stalled, 0), 1u);
  EXPECT_EQ(code_of([&] { q_of(stalled, 1); }), ErrorCode::kQUndefined);
  EXPECT_EQ(fast_min_grundy(stalled, 6).values, oracle::min_nim({0, 0, 1, 2, 3, 4}, 6));
}

TEST(Coupling, ZeroCountOfMaxIsMin) {
  EXPECT_EQ(min_from_max(fast_grundy(RuleSequence::half(), 17)).values, kMinHalf17);
  EXPECT_EQ(min_from_max(fast_grundy(RuleSequence::sqrt(), 4096)).values,
            naive_min_grundy(RuleSequence::sqrt(), 4096).values);
  GrundyPrefix distinct;
  distinct.values = {0, 1, 2, 3, 4};
  EXPECT_EQ(min_from_max(distinct).values, (V{0, 0, 0, 0, 0}));
  EXPECT_EQ(min_from_max(distinct).method, Method::kFromMaxZeros);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const V f = oracle::random_regular(rng, 512);
    const RuleSequence rule = RuleSequence::table(f);
    EXPECT_EQ(min_from_max(fast_grundy(rule, 512)).values, oracle::min_nim(f, 512));
  }
}

TEST(Coupling, DispersionAndZeroChain) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const V f = oracle::random_regular(rng, 800);
    const RuleSequence rule = RuleSequence::table(f);
    const GrundyPrefix g = fast_grundy(rule, 800);
    for (Natural m = 0; m < 200; ++m) {
      Natural q = 0;
      try {
        q = q_of(rule, m);
      } catch (const Error&) {
        break;
      }
      EXPECT_EQ(g[q], g[m]) << "m = " << m;
    }
    V zeros;
    for (Natural n = 1; n < g.size(); ++n) {
      if (g[n] == 0) zeros.push_back(n);
    }
    V chain;
    for (Natural z = 0;;) {
      try {
        z = q_of(rule, z);
      } catch (const Error&) {
        break;
      }
      chain.push_back(z);
    }
    EXPECT_EQ(zeros, chain);
  }
}

TEST(Pairs, Examples) {
  const RuleSequence half = RuleSequence::half();
  EXPECT_EQ(pair_encode(half, 12), std::make_pair(Natural{1}, Natural{4}));
  EXPECT_EQ(pair_encode(half, 0), std::make_pair(Natural{0}, Natural{0}));
  EXPECT_EQ(pair_encode(half, 9), std::make_pair(Natural{4}, Natural{4}));
  EXPECT_EQ(pair_decode(half, 2, 5, 1 << 12), 20u);
  EXPECT_EQ(pair_decode(half, 0, 0, 10), 0u);
  EXPECT_EQ(pair_decode(half, 3, 3, 1 << 12), 7u);
  EXPECT_EQ(code_of([&] { pair_decode(half, 3, 1, 1 << 12); }), ErrorCode::kPairOutOfRange);
  EXPECT_EQ(code_of([&] { pair_decode(half, 0, 20, 100); }), ErrorCode::kNotFound);
}

TEST(Pairs, EncodeDecodeRoundtrip) {
  for (const auto& rule : {RuleSequence::half(), RuleSequence::sqrt()}) {
    const PairTable table = pair_table(rule, 3000);
    std::set<std::pair<Natural, Natural>> seen;
    for (const PairEntry& e : table.entries) {
      EXPECT_TRUE(seen.emplace(e.g, e.h).second) << rule.name() << " n = " << e.n;
      if (e.n < 300) {
        EXPECT_EQ(pair_encode(rule, e.n), std::make_pair(e.g, e.h));
        EXPECT_EQ(pair_decode(rule, e.g, e.h, 3000), e.n);
      }
    }
  }
}

TEST(Pairs, QIterationAgreesWithScan) {
  for (const auto& rule : {RuleSequence::half(), RuleSequence::sqrt()}) {
    const GrundyPrefix g = fast_grundy(rule, 4096);
    for (Natural i = 0; i < 12; ++i) {
      const Natural offset = zero_offset(g.view(), i);
      for (Natural j = offset; j < offset + 4; ++j) {
        EXPECT_EQ(pair_decode_via_q(rule, i, j, 1 << 16), pair_decode(rule, i, j, 1 << 16))
            << rule.name() << " (" << i << ", " << j << ")";
      }
    }
  }
}

TEST(Pairs, ZeroOffsets) {
  const GrundyPrefix g = fast_grundy(RuleSequence::half(), 64);
  EXPECT_EQ(zero_offset(g.view(), 0), 0u);
  EXPECT_EQ(zero_offset(g.view(), 1), 2u);
  EXPECT_EQ(zero_offset(g.view(), 3), 3u);
  EXPECT_EQ(zero_offset(g.view(), 4), 4u);
  EXPECT_EQ(code_of([&] { zero_offset(g.view(), 1000); }), ErrorCode::kNotFound);
}

TEST(Arrays, HalfMatchesDisplay) {
  const PairArrays arrays = build_arrays(RuleSequence::half(), 5, 7);
  ASSERT_EQ(arrays.offset_rows.size(), 5u);
  const std::vector<V> expected{
      {0, 1, 2, 4, 8, 16, 32}, {3, 6, 12, 24, 48}, {5, 10, 20, 40}, {7, 14, 28, 56}, {9, 18, 36}};
  const V offsets{0, 2, 3, 3, 4};
  for (Natural i = 0; i < 5; ++i) {
    EXPECT_EQ(arrays.offset_rows[i].value, i);
    EXPECT_EQ(arrays.offset_rows[i].offset, offsets[i]);
    EXPECT_EQ(arrays.offset_rows[i].entries, expected[i]);
  }
  EXPECT_FALSE(arrays.left_justified.covers_window);
  EXPECT_TRUE(check_interspersion_array(arrays.left_justified).passed());
}

TEST(Arrays, EntriesDecodeToTheirPairs) {
  for (const auto& rule :
       {RuleSequence::half(), RuleSequence::sqrt(), regularize(RuleSequence::pow2(), 1 << 16)}) {
    const PairArrays arrays = build_arrays(rule, 24, 10);
    for (const auto& row : arrays.offset_rows) {
      for (Natural k = 0; k < row.entries.size(); ++k) {
        EXPECT_EQ(pair_encode(rule, row.entries[k]), std::make_pair(row.value, row.offset + k));
      }
    }
  }
}

TEST(Arrays, RowsAdvanceByQ) {
  for (const auto& rule :
       {RuleSequence::half(), RuleSequence::sqrt(), regularize(RuleSequence::pow2(), 1 << 16)}) {
    const PairArrays arrays = build_arrays(rule, 24, 10);
    for (const auto& row : arrays.offset_rows) {
      for (Natural k = 0; k + 1 < row.entries.size(); ++k) {
        EXPECT_EQ(q_of(rule, row.entries[k]), row.entries[k + 1]) << rule.name();
      }
    }
  }
}

TEST(Arrays, DegenerateWindow) {
  // f(n) = n: every g_n = n, so no value repeats and h stays at 0.
  V identity(200);
  for (Natural n = 0; n < identity.size(); ++n) identity[n] = n;
  EXPECT_EQ(code_of([&] { build_arrays(RuleSequence::table(identity), 3, 3); }),
            ErrorCode::kInsufficientWindow);
}

}  // namespace
}  // namespace grundylab
