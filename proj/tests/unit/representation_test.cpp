#include <gtest/gtest.h>

#include "ipg/corpus.hpp"
#include "ipg/dfs.hpp"
#include "ipg/representation.hpp"
#include "support.hpp"

namespace ipg {
namespace {

using test::array_of;
using test::words_of;

TEST(Bands, ClassifyIsAPartition) {
  const Bands b{5, 12};
  EXPECT_EQ(b.classify(0), Band::none);
  EXPECT_EQ(b.classify(1), Band::names);
  EXPECT_EQ(b.classify(5), Band::names);
  EXPECT_EQ(b.classify(6), Band::none);  // the L cell index, never a value
  EXPECT_EQ(b.classify(7), Band::positions);
  EXPECT_EQ(b.classify(18), Band::positions);
  EXPECT_EQ(b.classify(19), Band::sentinel);
  EXPECT_EQ(b.classify(20), Band::deg0ref);
  EXPECT_EQ(b.classify(24), Band::deg0ref);
  EXPECT_EQ(b.classify(25), Band::done_pos);
  EXPECT_EQ(b.classify(36), Band::done_pos);
  EXPECT_EQ(b.classify(37), Band::none);
  EXPECT_EQ(b.classify(38), Band::done_deg0);
  EXPECT_EQ(b.classify(42), Band::done_deg0);
  EXPECT_EQ(b.classify(43), Band::none);
  EXPECT_EQ(b.undone(b.done(9)), 9u);
  EXPECT_EQ(b.deg0ref_name(b.deg0ref(3)), 3u);
}

TEST(ToBeginPointer, SortedToBeginPointer) {
  WordArray a = array_of(test::sorted_words());
  Representation r(a);
  to_begin_pointer(r);
  EXPECT_EQ(words_of(a), test::begin_pointer_words());
  EXPECT_EQ(r.tag(), RepresentationTag::begin_pointer);
}

TEST(ToBeginPointer, SingleVertexSelfReference) {
  WordArray a = array_of({1, 3, 0});
  Representation r(a);
  to_begin_pointer(r);
  EXPECT_EQ(words_of(a), (std::vector<Word>{1, 1, 0}));
}

TEST(ToBeginPointer, DirectedBandedAndStrict) {
  WordArray a = build(test::directed3_edges());
  Representation banded(a);
  to_begin_pointer(banded);
  EXPECT_EQ(words_of(a), (std::vector<Word>{3, 5, 2, 3, 2, 9, 10}));

  WordArray s = build(test::directed3_edges());
  Representation strict(s, BandMode::strict);
  to_begin_pointer(strict);
  EXPECT_EQ(words_of(s), (std::vector<Word>{3, 5, 2, 3, 2, 2, 3}));
}

TEST(ToBeginPointer, RequiresSortedStandard) {
  WordArray a = array_of(test::begin_pointer_words());
  Representation r(a, BandMode::banded, RepresentationTag::begin_pointer);
  EXPECT_THROW(to_begin_pointer(r), RepresentationError);
}

TEST(Swap, BeginPointerToSwapped) {
  WordArray a = array_of(test::begin_pointer_words());
  Representation r(a, BandMode::banded, RepresentationTag::begin_pointer);
  swap_representation(r);
  EXPECT_EQ(words_of(a), test::swapped_words());
  EXPECT_EQ(r.tag(), RepresentationTag::swapped_begin_pointer);
}

TEST(Swap, AllDegreeZeroUnchanged) {
  WordArray a = build(EdgeList{4, false, {}});
  Representation r(a);
  to_begin_pointer(r);
  const std::vector<Word> before = words_of(a);
  swap_representation(r);
  EXPECT_EQ(words_of(a), before);
}

TEST(Swap, SwapThenUnswapIsIdentity) {
  WordArray a = array_of(test::begin_pointer_words());
  Representation r(a, BandMode::banded, RepresentationTag::begin_pointer);
  swap_representation(r);
  unswap_representation(r);
  EXPECT_EQ(words_of(a), test::begin_pointer_words());
}

TEST(Unswap, SwappedToBeginPointer) {
  WordArray a = array_of(test::swapped_words());
  Representation r(a, BandMode::banded, RepresentationTag::swapped_begin_pointer);
  unswap_representation(r);
  EXPECT_EQ(words_of(a), test::begin_pointer_words());
}

TEST(Unswap, SecondUnswapIsRefused) {
  WordArray a = array_of(test::swapped_words());
  Representation r(a, BandMode::banded, RepresentationTag::swapped_begin_pointer);
  unswap_representation(r);
  EXPECT_THROW(unswap_representation(r), RepresentationError);
  // The cell-level check agrees with the tag.
  EXPECT_FALSE(
      check_representation(a, RepresentationTag::swapped_begin_pointer, BandMode::banded).ok());
}

TEST(Unswap, SingleVertexUnchanged) {
  WordArray a = array_of({1, 1, 0});
  Representation r(a, BandMode::banded, RepresentationTag::swapped_begin_pointer);
  unswap_representation(r);
  EXPECT_EQ(words_of(a), (std::vector<Word>{1, 1, 0}));
}

TEST(Restore, SwappedToSorted) {
  WordArray a = array_of(test::swapped_words());
  Representation r(a, BandMode::banded, RepresentationTag::swapped_begin_pointer);
  restore_sorted_standard(r);
  EXPECT_EQ(words_of(a), test::sorted_words());
  EXPECT_EQ(r.tag(), RepresentationTag::sorted_standard);
}

TEST(Restore, BeginPointerToSorted) {
  WordArray a = array_of(test::begin_pointer_words());
  Representation r(a, BandMode::banded, RepresentationTag::begin_pointer);
  restore_sorted_standard(r);
  EXPECT_EQ(words_of(a), test::sorted_words());
}

TEST(Restore, DirectedBandedExample) {
  WordArray a = array_of({3, 5, 2, 3, 2, 9, 10});
  Representation r(a, BandMode::banded, RepresentationTag::begin_pointer);
  restore_sorted_standard(r);
  EXPECT_EQ(words_of(a), (std::vector<Word>{3, 5, 7, 7, 2, 2, 3}));
}

TEST(Restore, DirectedStrictExample) {
  WordArray a = array_of({3, 5, 2, 3, 2, 2, 3});
  Representation r(a, BandMode::strict, RepresentationTag::begin_pointer);
  restore_sorted_standard(r);
  EXPECT_EQ(words_of(a), (std::vector<Word>{3, 5, 7, 7, 2, 2, 3}));
}

TEST(ReferenceArrays, SortedBeginPointerSwappedSorted) {
  WordArray a = array_of(test::sorted_words());
  Representation r(a);
  to_begin_pointer(r);
  EXPECT_EQ(words_of(a), test::begin_pointer_words());
  swap_representation(r);
  EXPECT_EQ(words_of(a), test::swapped_words());
  restore_sorted_standard(r);
  EXPECT_EQ(words_of(a), test::sorted_words());
}

TEST(CheckRepresentation, ReferenceArraysMatchTheirTags) {
  const auto ok = [](const std::vector<Word>& w, RepresentationTag t) {
    return check_representation(array_of(w), t, BandMode::banded).ok();
  };
  EXPECT_TRUE(ok(test::sorted_words(), RepresentationTag::sorted_standard));
  EXPECT_TRUE(ok(test::begin_pointer_words(), RepresentationTag::begin_pointer));
  EXPECT_TRUE(ok(test::swapped_words(), RepresentationTag::swapped_begin_pointer));
  EXPECT_FALSE(ok(test::sorted_words(), RepresentationTag::begin_pointer));
}

// Every transform stays within 6N accesses (N = n + L + 2); restoring from
// the unswapped state pays an extra swap and stays within 10N.
TEST(AccessBounds, LinearPerTransform) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const CorpusCase c = corpus_case(8, i, 2048);
    WordArray a = build(realize(c));
    const std::uint64_t big_n = a.size();
    auto cost = [&](auto&& step) {
      a.reset_stats();
      step();
      return a.stats().reads + a.stats().writes;
    };
    {
      Representation r(a);
      EXPECT_LE(cost([&] { to_begin_pointer(r); }), 6 * big_n) << c.describe();
      EXPECT_LE(cost([&] { swap_representation(r); }), 6 * big_n) << c.describe();
      EXPECT_LE(cost([&] { unswap_representation(r); }), 6 * big_n) << c.describe();
      EXPECT_LE(cost([&] { restore_sorted_standard(r); }), 10 * big_n) << c.describe();
    }
    {
      Representation r(a);
      to_begin_pointer(r);
      swap_representation(r);
      EXPECT_LE(cost([&] { restore_sorted_standard(r); }), 6 * big_n) << c.describe();
    }
  }
}

bool in_strict_domain(const WordArray& a) {
  try {
    check_strict_domain(a);
    return true;
  } catch (const RepresentationError&) {
    return false;
  }
}

TEST(RoundTrip, CorpusIsRestoredBitExactly) {
  for (BandMode mode : {BandMode::banded, BandMode::strict}) {
    for (std::uint64_t i = 0; i < 400; ++i) {
      const CorpusCase c = corpus_case(13, i, 1024);
      WordArray a = build(realize(c));
      if (mode == BandMode::strict && !in_strict_domain(a)) continue;
      const Digest before = snapshot(a);
      Representation r(a, mode);
      to_begin_pointer(r);
      EXPECT_TRUE(check_representation(a, RepresentationTag::begin_pointer, mode).ok());
      swap_representation(r);
      EXPECT_TRUE(check_representation(a, RepresentationTag::swapped_begin_pointer, mode).ok());
      restore_sorted_standard(r);
      EXPECT_EQ(snapshot(a), before) << c.describe();
    }
  }
}

TEST(RoundTrip, RunsWithinConstantRegisters) {
  WordArray a = build(generate(GeneratorModel::gnm, 3000, 9000, 1, false));
  const auto r = run_budgeted(a, kRegisterBudget, [&](RegisterFile& regs) {
    Representation rep(a);
    to_begin_pointer(rep, regs);
    swap_representation(rep, regs);
    restore_sorted_standard(rep, regs);
  });
  EXPECT_LE(r.stats.peak_registers, 8u);
}

}  // namespace
}  // namespace ipg
