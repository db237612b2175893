#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "ipg/graph.hpp"

namespace ipg {

namespace {

// Bounded draw that does not depend on the standard library's distribution
// implementation, so generated files are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t max_edges(std::size_t n, bool directed) {
  const std::uint64_t nn = n;
  return directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
}

// Uniform simple graph with `m` edges on the vertices listed in `pool`.
void sample_gnm(const std::vector<Vertex>& pool, std::size_t m, bool directed,
                Rng& rng, std::vector<Edge>& out) {
  const std::size_t k = pool.size();
  if (m == 0) return;
  const std::uint64_t cap = max_edges(k, directed);
  if (2 * std::uint64_t{m} > cap) {
    std::vector<Edge> all;
    all.reserve(cap);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = directed ? 0 : i + 1; j < k; ++j) {
        if (i != j) all.push_back({pool[i], pool[j]});
      }
    }
    rng.shuffle(all);
    out.insert(out.end(), all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    return;
  }
  std::unordered_set<std::uint64_t> taken;
  taken.reserve(2 * m);
  std::size_t added = 0;
  while (added < m) {
    std::size_t i = rng.below(k);
    std::size_t j = rng.below(k);
    if (i == j) continue;
    if (!directed && i > j) std::swap(i, j);
    if (taken.insert(std::uint64_t{i} * k + j).second) {
      out.push_back({pool[i], pool[j]});
      ++added;
    }
  }
}

std::vector<Vertex> iota_vertices(std::size_t first, std::size_t last) {
  std::vector<Vertex> v(last >= first ? last - first + 1 : 0);
  std::iota(v.begin(), v.end(), Vertex{first});
  return v;
}

void relabel(EdgeList& e, Rng& rng) {
  std::vector<Vertex> perm = iota_vertices(1, e.n);
  rng.shuffle(perm);
  for (Edge& ed : e.edges) {
    ed.u = perm[ed.u - 1];
    ed.v = perm[ed.v - 1];
  }
}

// Hubs 1..k joined by `extra` random edges; the remaining vertices form
// chains hub -> c1 -> ... -> cl, whose tail either returns to a hub, loops
// back into the chain, or stops.
void deg1_chains(EdgeList& e, std::size_t extra, Rng& rng) {
  const std::size_t n = e.n;
  const std::size_t hubs = std::max<std::size_t>(2, n / 4);
  if (n < 3) throw ParameterError("deg1-chains needs n >= 3");
  const std::vector<Vertex> hub_pool = iota_vertices(1, hubs);
  if (extra > max_edges(hubs, e.directed)) {
    throw ParameterError("deg1-chains: m=" + std::to_string(extra) +
                         " exceeds hub edge capacity " +
                         std::to_string(max_edges(hubs, e.directed)));
  }
  sample_gnm(hub_pool, extra, e.directed, rng, e.edges);
  std::unordered_set<std::uint64_t> used;
  auto key = [&](Vertex a, Vertex b) {
    if (!e.directed && a > b) std::swap(a, b);
    return a * (n + 1) + b;
  };
  for (const Edge& ed : e.edges) used.insert(key(ed.u, ed.v));
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return;
    if (used.insert(key(a, b)).second) e.edges.push_back({a, b});
  };

  std::vector<Vertex> rest = iota_vertices(hubs + 1, n);
  rng.shuffle(rest);
  std::size_t i = 0;
  while (i < rest.size()) {
    const std::size_t len = std::min<std::size_t>(1 + rng.below(6), rest.size() - i);
    const Vertex head = 1 + rng.below(hubs);
    add(head, rest[i]);
    for (std::size_t k = 1; k < len; ++k) add(rest[i + k - 1], rest[i + k]);
    const Vertex tail = rest[i + len - 1];
    switch (rng.below(4)) {
      case 0:
      case 1:
        add(tail, 1 + rng.below(hubs));
        break;
      case 2:
        if (len > 2) add(tail, rest[i + rng.below(len - 2)]);
        break;
      default:
        break;
    }
    i += len;
  }
}

}  // namespace

std::optional<GeneratorModel> parse_model(std::string_view name) {
  if (name == "gnm") return GeneratorModel::gnm;
  if (name == "path") return GeneratorModel::path;
  if (name == "cycle") return GeneratorModel::cycle;
  if (name == "star") return GeneratorModel::star;
  if (name == "binary-tree") return GeneratorModel::binary_tree;
  if (name == "deg1-chains") return GeneratorModel::deg1_chains;
  if (name == "isolated-mix") return GeneratorModel::isolated_mix;
  return std::nullopt;
}

std::string_view model_name(GeneratorModel model) {
  switch (model) {
    case GeneratorModel::gnm: return "gnm";
    case GeneratorModel::path: return "path";
    case GeneratorModel::cycle: return "cycle";
    case GeneratorModel::star: return "star";
    case GeneratorModel::binary_tree: return "binary-tree";
    case GeneratorModel::deg1_chains: return "deg1-chains";
    case GeneratorModel::isolated_mix: return "isolated-mix";
  }
  return "unknown";
}

EdgeList generate(GeneratorModel model, std::size_t n, std::size_t m,
                  std::uint64_t seed, bool directed) {
  if (n == 0) throw ParameterError("n must be at least 1");
  EdgeList e;
  e.n = n;
  e.directed = directed;
  Rng rng(seed);
  switch (model) {
    case GeneratorModel::gnm: {
      if (m > max_edges(n, directed)) {
        throw ParameterError("gnm: m=" + std::to_string(m) + " exceeds " +
                             std::to_string(max_edges(n, directed)) +
                             " possible edges for n=" + std::to_string(n));
      }
      sample_gnm(iota_vertices(1, n), m, directed, rng, e.edges);
      break;
    }
    case GeneratorModel::path:
      for (Vertex v = 1; v < n; ++v) e.edges.push_back({v, v + 1});
      break;
    case GeneratorModel::cycle:
      if (n < (directed ? 2u : 3u)) {
        throw ParameterError("cycle needs n >= " + std::string(directed ? "2" : "3"));
      }
      for (Vertex v = 1; v < n; ++v) e.edges.push_back({v, v + 1});
      e.edges.push_back({Vertex{n}, 1});
      break;
    case GeneratorModel::star:
      for (Vertex v = 2; v <= n; ++v) e.edges.push_back({1, v});
      break;
    case GeneratorModel::binary_tree:
      for (Vertex v = 2; v <= n; ++v) e.edges.push_back({v / 2, v});
      break;
    case GeneratorModel::deg1_chains:
      deg1_chains(e, m, rng);
      relabel(e, rng);
      break;
    case GeneratorModel::isolated_mix: {
      std::size_t active = n / 2;
      while (active < n && max_edges(active, directed) < m) ++active;
      if (max_edges(active, directed) < m) {
        throw ParameterError("isolated-mix: m=" + std::to_string(m) +
                             " exceeds capacity for n=" + std::to_string(n));
      }
      std::vector<Vertex> all = iota_vertices(1, n);
      rng.shuffle(all);
      all.resize(active);
      std::sort(all.begin(), all.end());
      sample_gnm(all, m, directed, rng, e.edges);
      break;
    }
  }
  std::sort(e.edges.begin(), e.edges.end());
  return e;
}

}  // namespace ipg
