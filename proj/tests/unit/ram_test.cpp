#include <gtest/gtest.h>

#include <random>
#include <set>
#include <utility>

#include "ipg/dfs.hpp"
#include "ipg/oracle.hpp"
#include "support.hpp"

namespace ipg {
namespace {

TEST(WordArray, ReadsSampleCells) {
  const WordArray a = test::array_of(test::sorted_words());
  EXPECT_EQ(a.read(0), 5u);
  EXPECT_EQ(a.read(6), 12u);
  EXPECT_EQ(a.stats().reads, 2u);
}

TEST(WordArray, ReadYourWriteAndLastWriteWins) {
  WordArray a(16, std::size_t{4});
  a.write(0, 5);
  EXPECT_EQ(a.read(0), 5u);
  a.write(0, 9);
  EXPECT_EQ(a.read(0), 9u);
  EXPECT_EQ(a.stats().writes, 2u);
}

TEST(WordArray, WriteAboveWidthOverflows) {
  WordArray a(16, std::size_t{2});
  EXPECT_THROW(a.write(1, Word{1} << 16), OverflowError);
  EXPECT_NO_THROW(a.write(1, (Word{1} << 16) - 1));
  WordArray full(64, std::size_t{1});
  EXPECT_NO_THROW(full.write(0, ~Word{0}));
}

TEST(WordArray, IndexOutOfRangeThrows) {
  WordArray a(8, std::size_t{3});
  EXPECT_THROW(a.read(3), BoundsError);
  EXPECT_THROW(a.write(3, 0), BoundsError);
}

TEST(WordArray, RejectsUnsupportedWidth) {
  EXPECT_THROW(WordArray(7, std::size_t{1}), ParameterError);
  EXPECT_THROW(WordArray(65, std::size_t{1}), ParameterError);
}

TEST(Snapshot, DeterministicAcrossCopies) {
  const WordArray a = test::array_of(test::sorted_words());
  const WordArray b = a;
  EXPECT_EQ(snapshot(a), snapshot(b));
  EXPECT_EQ(a.stats().reads, 0u);
}

TEST(Snapshot, EverySingleCellChangeIsDetected) {
  std::mt19937_64 rng(11);
  std::vector<Word> base(16);
  for (Word& x : base) x = rng() & 0xffff;
  const WordArray a(16, base);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen{{snapshot(a).lo, snapshot(a).hi}};
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (unsigned bit = 0; bit < 16; ++bit) {
      std::vector<Word> flipped = base;
      flipped[i] ^= Word{1} << bit;
      const Digest d = snapshot(WordArray(16, flipped));
      EXPECT_TRUE(seen.insert({d.lo, d.hi}).second) << "collision at cell " << i;
    }
  }
}

TEST(Snapshot, WidthIsPartOfTheDigest) {
  EXPECT_NE(snapshot(WordArray(16, test::sorted_words())),
            snapshot(WordArray(32, test::sorted_words())));
}

TEST(Snapshot, UndoneWritesLeaveDigestUnchanged) {
  WordArray a = test::array_of(test::sorted_words());
  const Digest before = snapshot(a);
  std::mt19937_64 rng(3);
  std::vector<std::pair<std::size_t, Word>> undo;
  for (int k = 0; k < 50; ++k) {
    const std::size_t i = rng() % a.size();
    undo.emplace_back(i, a.peek(i));
    a.write(i, rng() & 0xffff);
  }
  EXPECT_NE(snapshot(a), before);
  for (auto it = undo.rbegin(); it != undo.rend(); ++it) a.write(it->first, it->second);
  EXPECT_EQ(snapshot(a), before);
}

TEST(RunBudgeted, ReportsPeakRegisters) {
  const auto r = run_budgeted(64, [](RegisterFile& regs) {
    Registers<Word> a(regs), b(regs), c(regs);
    return *a + *b + *c;
  });
  EXPECT_EQ(r.stats.peak_registers, 3u);
  EXPECT_EQ(r.result, 0u);
}

TEST(RunBudgeted, LargeAllocationViolatesBudget) {
  try {
    run_budgeted(64, [](RegisterFile& regs) { ScratchWords big(regs, 1000); });
    FAIL() << "expected a budget violation";
  } catch (const BudgetViolation& e) {
    EXPECT_EQ(e.budget(), 64u);
    EXPECT_GT(e.peak(), 64u);
  }
}

TEST(RunBudgeted, RejectsZeroBudget) {
  EXPECT_THROW(run_budgeted(0, [](RegisterFile&) {}), ParameterError);
}

TEST(RunBudgeted, LeasesAreReleased) {
  RegisterFile regs(8);
  {
    ScratchWords s(regs, 8);
    EXPECT_EQ(regs.live(), 8u);
  }
  EXPECT_EQ(regs.live(), 0u);
  EXPECT_EQ(regs.peak(), 8u);
  EXPECT_NO_THROW(ScratchWords(regs, 8));
}

TEST(RunBudgeted, CountsArrayAccessDeltas) {
  WordArray a = test::array_of(test::sorted_words());
  a.read(0);
  const auto r = run_budgeted(a, 64, [&](RegisterFile&) {
    a.write(1, a.read(1));
    return 0;
  });
  EXPECT_EQ(r.stats.reads, 1u);
  EXPECT_EQ(r.stats.writes, 1u);
}

TEST(RunBudgeted, DfsOnLargeRandomGraphFitsBudget) {
  WordArray a = build(generate(GeneratorModel::gnm, 4096, 16384, 5, false));
  const Digest before = snapshot(a);
  const auto r = run_budgeted(a, kRegisterBudget, [&](RegisterFile& regs) {
    return dfs_run(a, DfsOptions{BandMode::banded, Vertex{1}, false}, regs);
  });
  EXPECT_LE(r.stats.peak_registers, kRegisterBudget);
  EXPECT_EQ(snapshot(a), before);
  EXPECT_EQ(r.result, oracle_dfs(to_edge_list(a, false), Vertex{1}));
}

}  // namespace
}  // namespace ipg
