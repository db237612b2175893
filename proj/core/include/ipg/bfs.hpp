#pragma once

// Round-based in-place BFS over the sorted standard representation.
//
// The pointer table is packed to free space for a four-color choice
// dictionary. Round z takes the vertices of the current frontier color in
// ascending order, reports (v, z), colors white neighbors with the other
// frontier color and blackens v. The two frontier colors alternate between
// rounds; the run stops after a round that colored nothing. The table is
// unpacked at the end, so the array is restored bit-exactly.

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ipg/graph.hpp"
#include "ipg/packed_table.hpp"
#include "ipg/ram.hpp"

namespace ipg {

struct BfsRecord {
  Vertex v = 0;
  Word dist = 0;
  Vertex root = 0;

  friend bool operator==(const BfsRecord&, const BfsRecord&) = default;
};

namespace detail {

struct BfsRegisters {
  Word n;
  Word end;  // one past the last adjacency cell, serves as T[n+1]
  Word z;
  Word v;
  Word j;
  Word stop;
  Word u;
  Word root;
  Color frontier;
  Color next;
  bool colored;
};

// Unpacks on scope exit so an exception from a sink cannot leave the table
// packed.
class UnpackGuard {
 public:
  explicit UnpackGuard(PackedTable& t) : t_(t) {}
  UnpackGuard(const UnpackGuard&) = delete;
  UnpackGuard& operator=(const UnpackGuard&) = delete;
  ~UnpackGuard() {
    if (done_) return;
    try {
      t_.unpack();
    } catch (...) {
      // Already unwinding; the original exception wins.
    }
  }
  void unpack() {
    done_ = true;
    t_.unpack();
  }

 private:
  PackedTable& t_;
  bool done_ = false;
};

template <class Sink>
void bfs_component(WordArray& a, PackedTable& t, ChoiceDictionary& d,
                   Registers<BfsRegisters>& r, Vertex root, Sink& sink) {
  r->root = root;
  r->z = 0;
  r->frontier = Color::light_gray;
  r->next = Color::dark_gray;
  d.set_color(root, r->frontier);
  for (;;) {
    r->colored = false;
    d.reset_cursor(r->frontier);
    while (auto v = d.choice(r->frontier)) {
      r->v = *v;
      sink(r->v, r->z, r->root);
      r->j = t.read(r->v);
      r->stop = r->v < r->n ? t.read(r->v + 1) : r->end;
      for (; r->j < r->stop; ++r->j) {
        r->u = a.read(r->j);
        if (d.color(r->u) == Color::white) {
          d.set_color(r->u, r->next);
          r->colored = true;
        }
      }
      d.set_color(r->v, Color::black);
    }
    if (!r->colored) return;
    ++r->z;
    std::swap(r->frontier, r->next);
  }
}

}  // namespace detail

// sink(v, dist, root) is called once per reached vertex, distances
// non-decreasing, ascending vertex order within a distance.
template <class Sink>
  requires std::invocable<Sink&, Vertex, Word, Vertex>
void bfs_run(WordArray& a, Vertex start, Sink&& sink, RegisterFile& regs) {
  const GraphHeader h = read_header(a, true);
  if (start < 1 || start > h.n) {
    throw BoundsError("start vertex " + std::to_string(start) + " outside [1, " +
                      std::to_string(h.n) + "]");
  }
  Registers<detail::BfsRegisters> r(regs);
  r->n = h.n;
  r->end = h.end_sentinel();
  PackedTable table(a, h.n, regs);
  detail::UnpackGuard guard(table);
  {
    ChoiceDictionary d(table, regs);
    detail::bfs_component(a, table, d, r, start, sink);
  }
  guard.unpack();
}

// Every component, roots taken in ascending order among unreached vertices.
template <class Sink>
  requires std::invocable<Sink&, Vertex, Word, Vertex>
void bfs_all_components(WordArray& a, Sink&& sink, RegisterFile& regs) {
  const GraphHeader h = read_header(a, true);
  Registers<detail::BfsRegisters> r(regs);
  r->n = h.n;
  r->end = h.end_sentinel();
  Registers<Word> root(regs);
  PackedTable table(a, h.n, regs);
  detail::UnpackGuard guard(table);
  {
    ChoiceDictionary d(table, regs);
    for (*root = 1; *root <= h.n; ++*root) {
      if (d.color(*root) == Color::white) detail::bfs_component(a, table, d, r, *root, sink);
    }
  }
  guard.unpack();
}

std::vector<BfsRecord> bfs_run(WordArray& a, Vertex start, RegisterFile& regs);
std::vector<BfsRecord> bfs_run(WordArray& a, Vertex start);
std::vector<BfsRecord> bfs_all_components(WordArray& a, RegisterFile& regs);
std::vector<BfsRecord> bfs_all_components(WordArray& a);

}  // namespace ipg
