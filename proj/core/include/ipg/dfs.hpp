#pragma once

// In-place depth-first search over the swapped begin-pointer representation.
//
// State lives in the array itself:
//   * T[v] of a gray vertex is a reverse pointer: the slot p of the parent's
//     array the edge to v was taken from. That slot temporarily holds v's
//     first adjacency value.
//   * A vertex is never left from the first cell of its array. Its first
//     value is exchanged with the second slot and explored from there; the
//     exchange is undone when the scan returns two slots past the start.
//   * A finished vertex keeps its first value done-marked in T (banded:
//     + (n+L+1), strict: + 1). A visited degree-zero vertex gets the sentinel
//     n+L+2 (banded).
//   * A white vertex of degree one reached from another degree-one vertex
//     stores that vertex's name as its reverse link; all members of such a
//     chain share the parent slot (the "holder") of the chain head.
//
// The traversal is a loop over tail transitions and uses a fixed register
// block; no stack, no allocation.

#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

#include "ipg/graph.hpp"
#include "ipg/ram.hpp"
#include "ipg/representation.hpp"

namespace ipg {

enum class DfsEventKind : std::uint8_t { pre, post, pre_explore, post_explore };

struct DfsEvent {
  DfsEventKind kind = DfsEventKind::pre;
  Vertex u = 0;  // edge tail for explore events, 0 otherwise
  Vertex v = 0;

  static DfsEvent pre(Vertex v) { return {DfsEventKind::pre, 0, v}; }
  static DfsEvent post(Vertex v) { return {DfsEventKind::post, 0, v}; }
  static DfsEvent pre_explore(Vertex u, Vertex v) {
    return {DfsEventKind::pre_explore, u, v};
  }
  static DfsEvent post_explore(Vertex u, Vertex v) {
    return {DfsEventKind::post_explore, u, v};
  }

  friend bool operator==(const DfsEvent&, const DfsEvent&) = default;
};

using DfsEventStream = std::vector<DfsEvent>;

struct DfsOptions {
  BandMode mode = BandMode::banded;
  std::optional<Vertex> start;  // empty: every component, ascending roots
  bool explore = false;         // emit pre/postexplore; O(n(n+m)) time
};

template <class H>
concept DfsHooks = requires(H& h, Vertex v) {
  h.preprocess(v);
  h.postprocess(v);
};

template <class H>
concept DfsExploreHooks = DfsHooks<H> && requires(H& h, Vertex u, Vertex v) {
  h.preexplore(u, v);
  h.postexplore(u, v);
};

// Observation points for instrumented runs. Implementations may only read.
class DfsProbe {
 public:
  virtual ~DfsProbe() = default;
  virtual void on_component(const WordArray&, Vertex /*start*/) {}
  virtual void on_visit(const WordArray&, Word /*q*/, Vertex /*v*/) {}
  // The first value (held in cell `holder`) now sits in slot q+1.
  virtual void after_first_entry(const WordArray&, Word /*q*/, Word /*holder*/) {}
  // Follow of the edge at slot p into white vertex v.
  virtual void before_follow(const WordArray&, Word /*p*/, Vertex /*v*/) {}
  virtual void after_follow(const WordArray&, Word /*p*/, Vertex /*v*/) {}
  // Backtrack from v (array start q) to the parent slot p.
  virtual void before_backtrack(const WordArray&, Word /*q*/, Vertex /*v*/, Word /*p*/) {}
  virtual void after_backtrack(const WordArray&, Word /*q*/, Vertex /*v*/, Word /*p*/) {}
  virtual void on_component_done(const WordArray&, Vertex /*start*/) {}
};

// Cell-level primitives on a swapped begin-pointer array. Exposed for tests.

// First position p with A[p] = vs; empty when vs has degree zero.
std::optional<Word> find_start(const WordArray& a, const Bands& b, Vertex vs);

bool is_white(const WordArray& a, const Bands& b, BandMode mode, Vertex v,
              Vertex active_start);

// Creates the reverse pointer for the edge at slot p: with q = A[p] and
// v = A[q], the slot takes v's first value and T[v] := p. Returns q.
Word follow_edge(WordArray& a, Word p);

// Removes v's reverse pointer (v = A[q], p = T[v]): T[v] := done(A[p]) and
// A[p] := q. Returns p.
Word backtrack_edge(WordArray& a, const Bands& b, BandMode mode, Word q);

// Throws RepresentationError unless every vertex has out-degree 0 or >= 2 and
// no edge leads to a degree-zero vertex. Sorted standard input.
void check_strict_domain(const WordArray& a);

// Undoes done-marks and sentinels, then restores the sorted standard array.
void restore_after_dfs(Representation& r, RegisterFile& regs);

namespace detail {

enum class DfsStep : std::uint8_t { visit, single, consider, next, finish, done };

struct DfsRegisters {
  Word vs;    // active start vertex
  Word p;     // scan position
  Word q;     // array start being visited
  Word h;     // holder cell of the current vertex's first value
  Word c;     // current vertex
  Word y;     // edge target
  Word ref;   // adjacency value under inspection
  Word link;  // reverse pointer or chain link
  Word back;  // value restored into the parent's slot
  Word t;
  Word u;     // edge tail (explore)
  Word root;
  Word cursor;
  DfsStep step;
};

template <class Hooks>
class InplaceDfs {
 public:
  InplaceDfs(WordArray& a, const Bands& b, BandMode mode, bool explore, Hooks& hooks,
             RegisterFile& regs, DfsProbe* probe)
      : a_(a),
        b_(b),
        banded_(mode == BandMode::banded),
        explore_(explore),
        hooks_(hooks),
        probe_(probe),
        r_(regs) {}

  void run_from(Vertex vs) {
    if (vs < 1 || vs > b_.n) {
      throw BoundsError("start vertex " + std::to_string(vs) + " outside [1, " +
                        std::to_string(b_.n) + "]");
    }
    const std::optional<Word> q = find_start(a_, b_, vs);
    if (q) {
      component(vs, *q);
    } else {
      isolated(vs);
    }
  }

  // Roots in ascending order; two monotone cursors keep this O(n + L).
  void run_all() {
    r_->cursor = b_.first();
    for (r_->root = 1; r_->root <= b_.n; ++r_->root) {
      r_->t = a_.read(r_->root);
      if (r_->t == r_->root) {
        isolated(r_->root);
        continue;
      }
      if (banded_ && r_->t == b_.sentinel()) continue;
      while (!b_.is_name(a_.read(r_->cursor))) ++r_->cursor;
      r_->vs = 0;
      if (white(r_->root)) component(r_->root, r_->cursor);
      ++r_->cursor;
    }
  }

 private:
  static constexpr bool kExploreHooks = DfsExploreHooks<Hooks>;

  Word read(Word i) const { return a_.read(i); }
  void write(Word i, Word v) { a_.write(i, v); }

  Word done(Word x) const { return banded_ ? b_.done(x) : x + 1; }

  Word name_of(Word ref) const {
    return b_.is_position(ref) ? read(ref) : b_.deg0ref_name(ref);
  }

  bool white(Vertex y) const {
    return is_white(a_, b_, banded_ ? BandMode::banded : BandMode::strict, y, r_->vs);
  }

  // Start of the array containing the non-first slot p.
  Word owner(Word p) const {
    Word s = p - 1;
    while (!b_.is_name(read(s))) --s;
    return read(s);
  }

  // Cell holding c's first adjacency value: T[vs] for the start, else the
  // parent slot reached through c's reverse pointer or chain links.
  Word holder(Word c) const {
    if (!banded_) return c == r_->vs ? c : read(c);
    for (;;) {
      if (c == r_->vs) return c;
      const Word t = read(c);
      if (b_.is_position(t)) return t;
      if (!b_.is_name(t) || t == c) throw CorruptionError("broken reverse link", c);
      c = t;
    }
  }

  void pre_explore(Word u, Word y) {
    if constexpr (kExploreHooks) {
      if (explore_) hooks_.preexplore(u, y);
    }
  }
  void post_explore(Word u, Word y) {
    if constexpr (kExploreHooks) {
      if (explore_) hooks_.postexplore(u, y);
    }
  }

  void isolated(Vertex v) {
    if (probe_) probe_->on_component(a_, v);
    hooks_.preprocess(v);
    hooks_.postprocess(v);
    if (banded_) write(v, b_.sentinel());
    if (probe_) probe_->on_component_done(a_, v);
  }

  void visit_degree_zero(Vertex y) {
    hooks_.preprocess(y);
    hooks_.postprocess(y);
    write(y, b_.sentinel());
  }

  void component(Vertex vs, Word q) {
    r_->vs = vs;
    r_->q = q;
    r_->h = vs;
    r_->step = DfsStep::visit;
    if (probe_) probe_->on_component(a_, vs);
    while (r_->step != DfsStep::done) {
      switch (r_->step) {
        case DfsStep::visit: visit(); break;
        case DfsStep::single: single(); break;
        case DfsStep::consider: consider(); break;
        case DfsStep::next: next(); break;
        case DfsStep::finish: finish(); break;
        case DfsStep::done: break;
      }
    }
    if (probe_) probe_->on_component_done(a_, vs);
  }

  // Array start q, first value in cell h.
  void visit() {
    r_->c = read(r_->q);
    if (probe_) probe_->on_visit(a_, r_->q, r_->c);
    hooks_.preprocess(r_->c);
    if (r_->q + 1 <= b_.last() && !b_.is_name(read(r_->q + 1))) {
      // First entry: explore the first value from the second slot.
      r_->t = read(r_->h);
      write(r_->h, read(r_->q + 1));
      write(r_->q + 1, r_->t);
      if (probe_) probe_->after_first_entry(a_, r_->q, r_->h);
      r_->p = r_->q + 1;
      r_->step = DfsStep::consider;
    } else {
      r_->step = DfsStep::single;
    }
  }

  // Degree-one vertex c: its only value sits in the holder.
  void single() {
    r_->ref = read(r_->h);
    if (b_.is_position(r_->ref)) {
      r_->y = read(r_->ref);
      pre_explore(r_->c, r_->y);
      if (white(r_->y)) {
        if (!banded_) throw RepresentationError("strict mode reached a degree-one vertex");
        write(r_->h, read(r_->y));
        write(r_->y, r_->c);
        r_->q = r_->ref;
        r_->step = DfsStep::visit;
        return;
      }
    } else if (banded_ && b_.is_deg0ref(r_->ref)) {
      r_->y = b_.deg0ref_name(r_->ref);
      pre_explore(r_->c, r_->y);
      if (read(r_->y) == r_->y) visit_degree_zero(r_->y);
    } else {
      throw CorruptionError("adjacency value outside every band", r_->h);
    }
    post_explore(r_->c, r_->y);
    r_->back = r_->q;
    r_->step = DfsStep::finish;
  }

  // Edge at non-first slot p.
  void consider() {
    r_->ref = read(r_->p);
    if (b_.is_position(r_->ref)) {
      r_->y = read(r_->ref);
      if (explore_) r_->u = owner(r_->p);
      pre_explore(r_->u, r_->y);
      if (white(r_->y)) {
        if (probe_) probe_->before_follow(a_, r_->p, r_->y);
        write(r_->p, read(r_->y));
        write(r_->y, r_->p);
        if (probe_) probe_->after_follow(a_, r_->p, r_->y);
        r_->h = r_->p;
        r_->q = r_->ref;
        r_->step = DfsStep::visit;
        return;
      }
    } else if (banded_ && b_.is_deg0ref(r_->ref)) {
      r_->y = b_.deg0ref_name(r_->ref);
      if (explore_) r_->u = owner(r_->p);
      pre_explore(r_->u, r_->y);
      if (read(r_->y) == r_->y) visit_degree_zero(r_->y);
    } else {
      throw CorruptionError("adjacency value outside every band", r_->p);
    }
    post_explore(r_->u, r_->y);
    ++r_->p;
    r_->step = DfsStep::next;
  }

  void next() {
    const Word p = r_->p;
    if (p - 2 >= b_.first() && b_.is_name(read(p - 2))) {
      // Two slots past the start: undo the first-entry exchange if the
      // second slot still holds the (smaller) first value.
      r_->c = read(p - 2);
      r_->h = holder(r_->c);
      const Word second = read(p - 1);
      const Word first = read(r_->h);
      const bool exchanged =
          banded_ ? name_of(second) < name_of(first) : second < first;
      if (exchanged) {
        write(p - 1, first);
        write(r_->h, second);
        r_->p = p - 1;
        r_->step = DfsStep::consider;
        return;
      }
    }
    if (p > b_.last() || b_.is_name(read(p))) {
      r_->q = p - 1;
      while (!b_.is_name(read(r_->q))) --r_->q;
      r_->c = read(r_->q);
      r_->h = holder(r_->c);
      r_->back = r_->q;
      r_->step = DfsStep::finish;
      return;
    }
    r_->step = DfsStep::consider;
  }

  // c is done; `back` is the reference its parent must hold again. Unwinds
  // through degree-one ancestors until a slot of a larger-degree parent.
  void finish() {
    for (;;) {
      if (r_->c == r_->vs) {
        write(r_->vs, done(read(r_->vs)));
        hooks_.postprocess(r_->c);
        r_->step = DfsStep::done;
        return;
      }
      r_->link = read(r_->c);
      if (b_.is_position(r_->link)) {
        if (probe_) probe_->before_backtrack(a_, r_->back, r_->c, r_->link);
        write(r_->c, done(read(r_->h)));
        write(r_->link, r_->back);
        if (probe_) probe_->after_backtrack(a_, r_->back, r_->c, r_->link);
        hooks_.postprocess(r_->c);
        if (explore_) post_explore(owner(r_->link), r_->c);
        r_->p = r_->link + 1;
        r_->step = DfsStep::next;
        return;
      }
      if (!banded_ || !b_.is_name(r_->link)) {
        throw CorruptionError("reverse pointer outside every band", r_->c);
      }
      // Parent is the degree-one vertex `link`; its only value is the edge
      // to c, re-encoded as `back`.
      write(r_->c, done(read(r_->h)));
      write(r_->h, r_->back);
      hooks_.postprocess(r_->c);
      post_explore(r_->link, r_->c);
      r_->c = r_->link;
      r_->back = b_.deg0ref(r_->link);
    }
  }

  WordArray& a_;
  const Bands b_;
  const bool banded_;
  const bool explore_;
  Hooks& hooks_;
  DfsProbe* probe_;
  Registers<DfsRegisters> r_;
};

}  // namespace detail

// Runs the full pipeline: begin-pointer transform, swap, traversal, restore.
// The array is bit-exactly restored on return.
template <DfsHooks Hooks>
void dfs_run(WordArray& a, const DfsOptions& options, Hooks& hooks, RegisterFile& regs,
             DfsProbe* probe = nullptr) {
  if (options.mode == BandMode::strict) check_strict_domain(a);
  Representation rep(a, options.mode);
  if (options.start && (*options.start < 1 || *options.start > rep.bands().n)) {
    throw BoundsError("start vertex " + std::to_string(*options.start) +
                      " outside [1, " + std::to_string(rep.bands().n) + "]");
  }
  to_begin_pointer(rep, regs);
  swap_representation(rep, regs);
  {
    detail::InplaceDfs<Hooks> machine(a, rep.bands(), options.mode, options.explore,
                                      hooks, regs, probe);
    if (options.start) {
      machine.run_from(*options.start);
    } else {
      machine.run_all();
    }
  }
  restore_after_dfs(rep, regs);
}

// Collects the event stream.
DfsEventStream dfs_run(WordArray& a, const DfsOptions& options, RegisterFile& regs,
                       DfsProbe* probe = nullptr);
DfsEventStream dfs_run(WordArray& a, const DfsOptions& options);

// Same as dfs_run with explore events enabled.
DfsEventStream dfs_run_explore(WordArray& a, DfsOptions options, RegisterFile& regs);

}  // namespace ipg
