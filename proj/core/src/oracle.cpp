#include "ipg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace ipg {

namespace {

std::vector<std::vector<Vertex>> adjacency(const EdgeList& e) {
  std::vector<std::vector<Vertex>> adj(e.n + 1);
  for (const Edge& ed : e.edges) {
    if (ed.u < 1 || ed.u > e.n || ed.v < 1 || ed.v > e.n) {
      throw BoundsError("edge endpoint outside [1, " + std::to_string(e.n) + "]");
    }
    adj[ed.u].push_back(ed.v);
    if (!e.directed) adj[ed.v].push_back(ed.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

void check_start(const EdgeList& e, Vertex s) {
  if (s < 1 || s > e.n) {
    throw BoundsError("start vertex " + std::to_string(s) + " outside [1, " +
                      std::to_string(e.n) + "]");
  }
}

enum class Mark : unsigned char { white, gray, black };

void dfs_from(const std::vector<std::vector<Vertex>>& adj, Vertex s, bool edge_events,
              std::vector<Mark>& mark, DfsEventStream& out) {
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  mark[s] = Mark::gray;
  out.push_back(DfsEvent::pre(s));
  stack.push_back({s, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == adj[f.v].size()) {
      const Vertex v = f.v;
      mark[v] = Mark::black;
      out.push_back(DfsEvent::post(v));
      stack.pop_back();
      if (edge_events && !stack.empty()) {
        out.push_back(DfsEvent::post_explore(stack.back().v, v));
      }
      continue;
    }
    const Vertex u = f.v;
    const Vertex y = adj[u][f.next++];
    if (edge_events) out.push_back(DfsEvent::pre_explore(u, y));
    if (mark[y] == Mark::white) {
      mark[y] = Mark::gray;
      out.push_back(DfsEvent::pre(y));
      stack.push_back({y, 0});
    } else if (edge_events) {
      out.push_back(DfsEvent::post_explore(u, y));
    }
  }
}

void bfs_from(const std::vector<std::vector<Vertex>>& adj, Vertex s,
              std::vector<bool>& seen, std::vector<BfsRecord>& out) {
  std::deque<std::pair<Vertex, Word>> queue;
  seen[s] = true;
  queue.emplace_back(s, 0);
  const std::size_t first = out.size();
  while (!queue.empty()) {
    const auto [v, d] = queue.front();
    queue.pop_front();
    out.push_back({v, d, s});
    for (Vertex y : adj[v]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.emplace_back(y, d + 1);
      }
    }
  }
  std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                   [](const BfsRecord& a, const BfsRecord& b) {
                     return a.dist != b.dist ? a.dist < b.dist : a.v < b.v;
                   });
}

}  // namespace

DfsEventStream oracle_dfs(const EdgeList& e, std::optional<Vertex> start, bool edge_events) {
  const auto adj = adjacency(e);
  std::vector<Mark> mark(e.n + 1, Mark::white);
  DfsEventStream out;
  if (start) {
    check_start(e, *start);
    dfs_from(adj, *start, edge_events, mark, out);
    return out;
  }
  for (Vertex v = 1; v <= e.n; ++v) {
    if (mark[v] == Mark::white) dfs_from(adj, v, edge_events, mark, out);
  }
  return out;
}

std::vector<BfsRecord> oracle_bfs(const EdgeList& e, Vertex start) {
  check_start(e, start);
  const auto adj = adjacency(e);
  std::vector<bool> seen(e.n + 1, false);
  std::vector<BfsRecord> out;
  bfs_from(adj, start, seen, out);
  return out;
}

std::vector<BfsRecord> oracle_bfs_all(const EdgeList& e) {
  const auto adj = adjacency(e);
  std::vector<bool> seen(e.n + 1, false);
  std::vector<BfsRecord> out;
  for (Vertex v = 1; v <= e.n; ++v) {
    if (!seen[v]) bfs_from(adj, v, seen, out);
  }
  return out;
}

Word oracle_packed_read(std::span<const Word> original, std::size_t i) {
  if (i >= original.size()) {
    throw BoundsError("index " + std::to_string(i) + " outside the retained copy");
  }
  return original[i];
}

}  // namespace ipg
