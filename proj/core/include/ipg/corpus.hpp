#pragma once

// Reproducible random graph cases: case `index` of corpus `seed` is a pure
// function of both, so any failing case can be replayed on its own.

#include <cstddef>
#include <cstdint>
#include <string>

#include "ipg/graph.hpp"

namespace ipg {

struct CorpusCase {
  GeneratorModel model = GeneratorModel::gnm;
  std::size_t n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  bool directed = false;

  std::string describe() const;
};

// Cycles through the models; n is log-uniform in [1, max_n].
CorpusCase corpus_case(std::uint64_t seed, std::uint64_t index, std::size_t max_n = 4096);

// Graph for the case; parameters are always feasible.
EdgeList realize(const CorpusCase& c);

// Cases whose every vertex has out-degree >= 2 (dense gnm plus cycles with
// chords), n in [3, max_n].
EdgeList min_degree_two(std::uint64_t seed, std::size_t max_n, bool directed);

}  // namespace ipg
