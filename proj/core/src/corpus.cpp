#include "ipg/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace ipg {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t below(std::uint64_t& state, std::uint64_t bound) {
  return bound <= 1 ? 0 : splitmix(state) % bound;
}

constexpr GeneratorModel kModels[] = {
    GeneratorModel::gnm,         GeneratorModel::path,         GeneratorModel::cycle,
    GeneratorModel::star,        GeneratorModel::deg1_chains,  GeneratorModel::isolated_mix,
    GeneratorModel::binary_tree,
};

std::uint64_t capacity(std::size_t n, bool directed) {
  const std::uint64_t nn = n;
  return directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
}

}  // namespace

std::string CorpusCase::describe() const {
  return "model=" + std::string(model_name(model)) + " n=" + std::to_string(n) +
         " m=" + std::to_string(m) + " seed=" + std::to_string(seed) +
         " directed=" + (directed ? "1" : "0");
}

CorpusCase corpus_case(std::uint64_t seed, std::uint64_t index, std::size_t max_n) {
  std::uint64_t state = seed * 0xD1B54A32D192ED03ULL + index;
  CorpusCase c;
  c.model = kModels[index % std::size(kModels)];
  c.directed = below(state, 2) == 1;
  c.seed = splitmix(state);
  const double top = std::log2(static_cast<double>(std::max<std::size_t>(max_n, 1)));
  const double u = static_cast<double>(splitmix(state) >> 11) / 9007199254740992.0;
  c.n = std::clamp<std::size_t>(static_cast<std::size_t>(std::exp2(u * top)), 1, max_n);
  switch (c.model) {
    case GeneratorModel::gnm:
    case GeneratorModel::isolated_mix: {
      std::uint64_t cap = capacity(c.n, c.directed);
      if (c.model == GeneratorModel::isolated_mix) cap /= 2;
      c.m = static_cast<std::size_t>(std::min<std::uint64_t>(cap, below(state, 4 * c.n + 1)));
      break;
    }
    case GeneratorModel::cycle:
      c.n = std::max<std::size_t>(c.n, c.directed ? 2 : 3);
      break;
    case GeneratorModel::deg1_chains: {
      c.n = std::max<std::size_t>(c.n, 3);
      const std::uint64_t hubs = std::max<std::size_t>(2, c.n / 4);
      c.m = static_cast<std::size_t>(
          std::min<std::uint64_t>(capacity(hubs, c.directed), below(state, c.n / 2 + 1)));
      break;
    }
    default:
      break;
  }
  return c;
}

EdgeList realize(const CorpusCase& c) { return generate(c.model, c.n, c.m, c.seed, c.directed); }

EdgeList min_degree_two(std::uint64_t seed, std::size_t max_n, bool directed) {
  std::uint64_t state = seed;
  const std::size_t n = 3 + below(state, std::max<std::size_t>(max_n, 3) - 2);
  // A cycle guarantees degree >= 1 everywhere (>= 2 undirected); random
  // chords push every out-degree to >= 2.
  EdgeList e;
  e.n = n;
  e.directed = directed;
  std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
  auto add = [&](Vertex u, Vertex v) {
    if (u == v || has[u][v]) return false;
    has[u][v] = true;
    if (!directed) has[v][u] = true;
    e.edges.push_back({u, v});
    return true;
  };
  for (Vertex v = 1; v <= n; ++v) add(v, v % n + 1);
  std::vector<std::size_t> out(n + 1, directed ? 1 : 2);
  const std::size_t extra = below(state, 2 * n + 1);
  for (std::size_t k = 0; k < extra; ++k) {
    const Vertex u = 1 + below(state, n);
    const Vertex v = 1 + below(state, n);
    if (add(u, v)) {
      ++out[u];
      if (!directed) ++out[v];
    }
  }
  for (Vertex u = 1; u <= n; ++u) {
    while (out[u] < 2) {
      const Vertex v = 1 + below(state, n);
      if (add(u, v)) {
        ++out[u];
        if (!directed) ++out[v];
      }
    }
  }
  std::sort(e.edges.begin(), e.edges.end());
  return e;
}

}  // namespace ipg
