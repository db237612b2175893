#pragma once

// Sorted standard representation:
//
//   A = [ n | T[1..n] | L | adjacency arrays of 1, 2, ..., n ]
//
// T[v] is the index of v's first adjacency cell, L the total adjacency length
// (m for directed graphs, 2m for undirected ones). Arrays are stored in vertex
// order and each is strictly ascending. A degree-zero vertex v < n shares its
// pointer with v+1; a degree-zero vertex n points one past the end (n+L+2).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipg/ram.hpp"

namespace ipg {

using Vertex = Word;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeList {
  std::size_t n = 0;
  bool directed = false;
  std::vector<Edge> edges;
};

struct GraphHeader {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t total_length = 0;  // L
  bool directed = false;
  unsigned width = kMaxWidth;

  std::size_t array_size() const noexcept { return n + total_length + 2; }
  std::size_t first_adjacency() const noexcept { return n + 2; }
  std::size_t last_adjacency() const noexcept { return n + total_length + 1; }
  Word end_sentinel() const noexcept { return n + total_length + 2; }
};

// Smallest width that can hold every value the in-place algorithms write:
// ceil(log2(3n + 2L + 4)), clamped to [8, 64].
unsigned min_width(std::size_t n, std::size_t total_length);

// Reads n and L from the array (counted reads) and checks the length.
GraphHeader read_header(const WordArray& a, bool directed);

// Throws ValidationError on self-loops, duplicates, out-of-range endpoints or
// an insufficient width.
WordArray build(const EdgeList& e, unsigned width);
WordArray build(const EdgeList& e);  // uses min_width

// deg(v) from the pointer table; valid in the sorted standard representation.
std::size_t degree(const WordArray& a, Vertex v);

struct Violation {
  std::size_t index = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

// Checks every sorted-standard invariant; uses uncounted reads.
ValidationReport validate(const WordArray& a, bool directed);

// Edge list recovered from a sorted standard array (undirected: u < v only).
EdgeList to_edge_list(const WordArray& a, bool directed);

enum class GeneratorModel {
  gnm,
  path,
  cycle,
  star,
  binary_tree,
  deg1_chains,
  isolated_mix,
};

std::optional<GeneratorModel> parse_model(std::string_view name);
std::string_view model_name(GeneratorModel model);

// Deterministic in `seed`. Throws ParameterError for infeasible (n, m).
// `m` is the edge count for gnm/isolated_mix, the number of extra hub edges
// for deg1_chains, and ignored by the fixed-shape models.
EdgeList generate(GeneratorModel model, std::size_t n, std::size_t m,
                  std::uint64_t seed, bool directed);

}  // namespace ipg
