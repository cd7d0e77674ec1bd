#include <gtest/gtest.h>

#include <random>

#include "grundylab/maxnim.hpp"
#include "grundylab/serialnim.hpp"
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

Natural solve(V heaps) { return serial_grundy(SerialPosition{std::move(heaps)}); }

// [a, v]: value of a leftmost heap of a stones in front of a row of value v.
Natural bracket(Natural a, Natural v) {
  std::set<Natural> options{v};
  for (Natural i = 1; i < a; ++i) options.insert(bracket(i, v));
  return a == 0 ? v : oracle::mex(options);
}

TEST(Serial, Examples) {
  EXPECT_EQ(solve({3, 5}), 2u);
  EXPECT_EQ(solve({5, 3}), 5u);
  EXPECT_EQ(solve({7}), 7u);
  EXPECT_EQ(solve({2, 2, 1}), 1u);
  EXPECT_EQ(solve({1, 2, 2}), 0u);
  EXPECT_EQ(serial_grundy_oracle(SerialPosition{{7}}), 7u);
  EXPECT_EQ(code_of([] { solve({}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { solve({3, 0}); }), ErrorCode::kInvalidArgument);
}

TEST(Serial, OracleSkipsEmptyHeapsAndBoundsSize) {
  EXPECT_EQ(serial_grundy_oracle(SerialPosition{{0, 3, 0, 5}}), solve({3, 5}));
  EXPECT_EQ(serial_grundy_oracle(SerialPosition{{}}), 0u);
  EXPECT_EQ(code_of([] { serial_grundy_oracle(SerialPosition{{40, 40}}, 64); }),
            ErrorCode::kSizeBound);
}

TEST(Serial, TwoHeapTable) {
  EXPECT_EQ(two_heap_values(3, 5), (V{3, 0, 1, 2, 4, 5}));
  for (Natural b = 1; b < 12; ++b) {
    const V row = two_heap_values(b, 30);
    EXPECT_EQ(row[0], b);
    for (Natural a = 1; a <= 30; ++a) EXPECT_EQ(row[a], a <= b ? a - 1 : a) << a << "," << b;
  }
}

TEST(Serial, ClosedFormMatchesGameTreeExhaustively) {
  oracle::SerialTree tree;
  Natural count = 0;
  oracle::for_each_row(4, 6, [&](const V& heaps) {
    ++count;
    const Natural value = tree.value(heaps);
    ASSERT_EQ(solve(heaps), value) << ::testing::PrintToString(heaps);
    ASSERT_EQ(serial_grundy_oracle(SerialPosition{heaps}), value);
    ASSERT_TRUE(value == heaps[0] || value + 1 == heaps[0]);
  });
  EXPECT_EQ(count, 6u + 36u + 216u + 1296u);
}

TEST(Serial, ClosedFormMatchesGameTreeOnRandomLargerRows) {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<Natural> len(1, 6), size(1, 12);
  oracle::SerialTree tree;
  for (int trial = 0; trial < 500; ++trial) {
    V heaps(len(rng));
    for (auto& h : heaps) h = size(rng);
    const Natural value = serial_grundy_oracle(SerialPosition{heaps});
    EXPECT_EQ(solve(heaps), value) << ::testing::PrintToString(heaps);
    EXPECT_TRUE(value == heaps[0] || value + 1 == heaps[0]);
    if (trial < 100) EXPECT_EQ(tree.value(heaps), value);
  }
}

TEST(Serial, BracketIsNotLeftAssociative) {
  EXPECT_EQ(bracket(bracket(1, 1), 2), 2u);
  EXPECT_EQ(bracket(1, bracket(1, 2)), 1u);
  EXPECT_EQ(solve({1, 1, 2}), 1u);
  bool found = false;
  for (Natural a = 1; a <= 5 && !found; ++a) {
    for (Natural b = 1; b <= 5 && !found; ++b) {
      for (Natural c = 1; c <= 5 && !found; ++c) {
        const Natural right = bracket(a, bracket(b, c));
        EXPECT_EQ(right, solve({a, b, c}));
        found = bracket(bracket(a, b), c) != right;
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(Serial, WinningMoves) {
  const auto move = serial_winning_move(SerialPosition{{5, 3}});
  ASSERT_TRUE(move.has_value());
  EXPECT_LT(*move, 5u);
  V after{5, 3};
  after[0] = *move;
  EXPECT_EQ(serial_grundy_oracle(SerialPosition{after}), 0u);
  EXPECT_TRUE(serial_winning_move(SerialPosition{{3, 5}}).has_value());
  EXPECT_FALSE(serial_winning_move(SerialPosition{{1, 2, 2}}).has_value());

  oracle::SerialTree tree;
  oracle::for_each_row(3, 6, [&](const V& heaps) {
    const auto m = serial_winning_move(SerialPosition{heaps});
    ASSERT_EQ(m.has_value(), tree.value(heaps) != 0);
    if (!m) return;
    V next = heaps;
    next[0] = *m;
    ASSERT_EQ(tree.value(next), 0u) << ::testing::PrintToString(heaps);
  });
}

TEST(Serial, SmallestNim) {
  EXPECT_EQ(smallest_nim_grundy(V{5, 3}), solve({3, 5}));
  EXPECT_EQ(smallest_nim_grundy(V{5, 3}), 2u);
  EXPECT_EQ(smallest_nim_grundy(V{4}), 4u);
  EXPECT_EQ(smallest_nim_grundy(V{2, 2, 1}), 0u);
}

TEST(SerialMaxNim, RowConstruction) {
  EXPECT_EQ(serial_row_for_pile(V{2, 3, 4}, 6), (V{1, 3, 2}));
  EXPECT_EQ(serial_row_for_pile(V{3, 2}, 3), (V{3}));
  EXPECT_EQ(serial_row_for_pile(V{3, 2}, 3, RowConvention::kLowerInclusive), (V{3}));
  EXPECT_EQ(serial_row_for_pile(V{3, 2}, 4), (V{1, 3}));
  EXPECT_EQ(code_of([] { serial_row_for_pile(V{3, 2}, 6); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { serial_row_for_pile(V{3, 2}, 0); }), ErrorCode::kInvalidArgument);
}

TEST(SerialMaxNim, Examples) {
  for (Natural n = 1; n <= 5; ++n) {
    const SerialEquivalence eq = check_serial_maxnim_equivalence(V{3, 2}, n);
    EXPECT_TRUE(eq.equal) << "n = " << n;
  }
  for (Natural n = 1; n <= 9; ++n) {
    const SerialEquivalence eq = check_serial_maxnim_equivalence(V{9}, n);
    EXPECT_TRUE(eq.equal);
    EXPECT_EQ(eq.maximum_nim, n);
  }
  const SerialEquivalence eq = check_serial_maxnim_equivalence(V{2, 3, 4}, 6);
  EXPECT_EQ(eq.row, (V{1, 3, 2}));
  EXPECT_TRUE(eq.equal);
}

TEST(SerialMaxNim, BothBoundaryConventionsAgree) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<Natural> len(1, 5), size(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    V heaps(len(rng));
    for (auto& h : heaps) h = size(rng);
    Natural total = 0;
    for (Natural h : heaps) total += h;
    const V g = naive_grundy(RuleSequence::serial(heaps), total + 1).values;
    for (Natural n = 1; n <= total; ++n) {
      const V upper = serial_row_for_pile(heaps, n, RowConvention::kUpperInclusive);
      const V lower = serial_row_for_pile(heaps, n, RowConvention::kLowerInclusive);
      EXPECT_EQ(upper, lower);
      const SerialEquivalence eq = check_serial_maxnim_equivalence(heaps, n);
      ASSERT_TRUE(eq.equal) << ::testing::PrintToString(heaps) << " n = " << n;
      EXPECT_EQ(eq.maximum_nim, g[n]);
      EXPECT_EQ(solve(upper), g[n]);
    }
  }
}

}  // namespace
}  // namespace grundylab
