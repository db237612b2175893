#include <gtest/gtest.h>

#include <array>
#include <set>
#include <stdexcept>

#include "ipg/bfs.hpp"
#include "ipg/corpus.hpp"
#include "ipg/oracle.hpp"
#include "support.hpp"

namespace ipg {
namespace {

std::vector<BfsRecord> records(std::initializer_list<std::array<Word, 3>> list) {
  std::vector<BfsRecord> out;
  for (const auto& r : list) out.push_back({r[0], r[1], r[2]});
  return out;
}

TEST(BfsRun, SampleFromVertex1) {
  WordArray a = test::array_of(test::sorted_words());
  EXPECT_EQ(bfs_run(a, 1), records({{1, 0, 1}, {2, 1, 1}, {5, 1, 1}, {3, 2, 1}, {4, 2, 1}}));
  EXPECT_EQ(test::words_of(a), test::sorted_words());
}

TEST(BfsRun, SingleVertex) {
  WordArray a = test::array_of({1, 3, 0});
  EXPECT_EQ(bfs_run(a, 1), records({{1, 0, 1}}));
}

TEST(BfsRun, DirectedThreeVertices) {
  WordArray a = build(test::directed3_edges());
  EXPECT_EQ(bfs_run(a, 1), records({{1, 0, 1}, {2, 1, 1}, {3, 1, 1}}));
  EXPECT_EQ(bfs_run(a, 2), records({{2, 0, 2}}));
}

TEST(BfsRun, RejectsBadStart) {
  WordArray a = test::array_of(test::sorted_words());
  EXPECT_THROW(bfs_run(a, 0), BoundsError);
  EXPECT_THROW(bfs_run(a, 6), BoundsError);
}

TEST(BfsRun, PackedPathMatchesOracle) {
  // Large enough to pack the table at its minimal width.
  const EdgeList e = generate(GeneratorModel::gnm, 2000, 6000, 3, false);
  WordArray a = build(e);
  const Digest before = snapshot(a);
  EXPECT_EQ(bfs_run(a, 7), oracle_bfs(e, 7));
  EXPECT_EQ(snapshot(a), before);
}

TEST(BfsRun, SinkExceptionStillRestores) {
  const EdgeList e = generate(GeneratorModel::gnm, 2000, 6000, 4, false);
  WordArray a = build(e);
  const Digest before = snapshot(a);
  RegisterFile regs;
  int calls = 0;
  EXPECT_THROW(bfs_run(
                   a, 1,
                   [&](Vertex, Word, Vertex) {
                     if (++calls == 50) throw std::runtime_error("stop");
                   },
                   regs),
               std::runtime_error);
  EXPECT_EQ(snapshot(a), before);
}

TEST(BfsAllComponents, TwoEdges) {
  WordArray a = build(EdgeList{4, false, {{1, 2}, {3, 4}}});
  EXPECT_EQ(bfs_all_components(a), records({{1, 0, 1}, {2, 1, 1}, {3, 0, 3}, {4, 1, 3}}));
}

TEST(BfsAllComponents, EmptyGraph) {
  WordArray a = build(EdgeList{3, false, {}});
  EXPECT_EQ(bfs_all_components(a), records({{1, 0, 1}, {2, 0, 2}, {3, 0, 3}}));
}

TEST(BfsAllComponents, ConnectedEqualsSingleRun) {
  WordArray a = test::array_of(test::sorted_words());
  EXPECT_EQ(bfs_all_components(a), bfs_run(a, 1));
}

TEST(BfsProperties, CorpusMatchesOracleAndRestores) {
  for (std::uint64_t i = 0; i < 400; ++i) {
    const CorpusCase c = corpus_case(19, i, 2048);
    const EdgeList e = realize(c);
    WordArray a = build(e);
    const Digest before = snapshot(a);
    const Vertex s = 1 + i % e.n;
    ASSERT_EQ(bfs_run(a, s), oracle_bfs(e, s)) << c.describe();
    ASSERT_EQ(bfs_all_components(a), oracle_bfs_all(e)) << c.describe();
    ASSERT_EQ(snapshot(a), before) << c.describe();
  }
}

TEST(BfsProperties, RegistersIndependentOfSize) {
  std::set<std::size_t> peaks;
  for (std::size_t n : {256u, 1024u, 4096u, 16384u}) {
    WordArray a = build(generate(GeneratorModel::gnm, n, 4 * n, 2, false));
    const auto r = run_budgeted(a, kRegisterBudget, [&](RegisterFile& regs) {
      return bfs_all_components(a, regs).size();
    });
    EXPECT_EQ(r.result, n);
    peaks.insert(r.stats.peak_registers);
  }
  EXPECT_EQ(peaks.size(), 1u);
  EXPECT_LE(*peaks.begin(), kRegisterBudget);
}

}  // namespace
}  // namespace ipg
