#pragma once

// Reference traversals with unrestricted memory. They consume edge lists, not
// the succinct array, so a bug in the array code cannot hide in both sides of
// a comparison. Neighbors are scanned in ascending order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ipg/bfs.hpp"
#include "ipg/dfs.hpp"
#include "ipg/graph.hpp"

namespace ipg {

// Explicit-stack DFS. With no start, every component in ascending root order.
DfsEventStream oracle_dfs(const EdgeList& e, std::optional<Vertex> start,
                          bool edge_events = false);

// Queue BFS from one start; records carry root = start. Within a distance the
// order is ascending by vertex.
std::vector<BfsRecord> oracle_bfs(const EdgeList& e, Vertex start);
std::vector<BfsRecord> oracle_bfs_all(const EdgeList& e);

// original[i], for checking packed reads against a copy kept aside.
Word oracle_packed_read(std::span<const Word> original, std::size_t i);

}  // namespace ipg
