#pragma once

// Binary graph file (little-endian):
//
//   "IPG1" | version u8 = 1 | width u8 (8..64) | flags u8 (bit0 = directed)
//   | reserved u8 | N u64 | N words of ceil(width/8) bytes each
//
// Text edge list: a header line "n m directed" followed by one "u v" per edge.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ipg/graph.hpp"
#include "ipg/ram.hpp"

namespace ipg {

struct StoredGraph {
  WordArray array;
  bool directed = false;
};

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kFileHeaderBytes = 16;

std::vector<std::uint8_t> store_graph(const WordArray& a, bool directed);
StoredGraph load_graph(std::span<const std::uint8_t> bytes);

void write_graph_file(const std::string& path, const WordArray& a, bool directed);
StoredGraph read_graph_file(const std::string& path);

void write_edge_list_text(std::ostream& os, const EdgeList& e);
EdgeList read_edge_list_text(std::istream& is);

}  // namespace ipg
