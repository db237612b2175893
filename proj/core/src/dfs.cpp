#include "ipg/dfs.hpp"

#include <string>

namespace ipg {

std::optional<Word> find_start(const WordArray& a, const Bands& b, Vertex vs) {
  const Word t = a.read(vs);
  if (t == vs || t == b.sentinel()) return std::nullopt;
  for (Word i = b.first(); i <= b.last(); ++i) {
    if (a.read(i) == vs) return i;
  }
  return std::nullopt;
}

bool is_white(const WordArray& a, const Bands& b, BandMode mode, Vertex v,
              Vertex active_start) {
  if (v == active_start) return false;
  const Word t = a.read(v);
  if (mode == BandMode::strict) return b.is_name(a.read(t));
  if (t == v || b.is_deg0ref(t)) return true;
  return b.is_position(t) && b.is_name(a.read(t));
}

Word follow_edge(WordArray& a, Word p) {
  const Word q = a.read(p);
  const Word v = a.read(q);
  a.write(p, a.read(v));
  a.write(v, p);
  return q;
}

Word backtrack_edge(WordArray& a, const Bands& b, BandMode mode, Word q) {
  const Word v = a.read(q);
  const Word p = a.read(v);
  const Word first = a.read(p);
  a.write(v, mode == BandMode::banded ? b.done(first) : first + 1);
  a.write(p, q);
  return p;
}

void check_strict_domain(const WordArray& a) {
  const GraphHeader h = read_header(a, true);
  const Word end = h.end_sentinel();
  for (Word v = 1; v <= h.n; ++v) {
    const Word next = v < h.n ? a.read(v + 1) : end;
    if (next - a.read(v) == 1) {
      throw RepresentationError("strict mode needs degree 0 or >= 2; vertex " +
                                std::to_string(v) + " has degree 1");
    }
  }
  for (Word i = h.first_adjacency(); i <= h.last_adjacency(); ++i) {
    const Word x = a.read(i);
    const Word next = x < h.n ? a.read(x + 1) : end;
    if (next == a.read(x)) {
      throw RepresentationError("strict mode cannot reference degree-zero vertex " +
                                std::to_string(x));
    }
  }
}

void restore_after_dfs(Representation& r, RegisterFile& regs) {
  r.require(RepresentationTag::swapped_begin_pointer, "restore_after_dfs");
  WordArray& a = r.array();
  const Bands& b = r.bands();
  struct Regs {
    Word v;
    Word t;
  };
  Registers<Regs> reg(regs);
  for (reg->v = 1; reg->v <= b.n; ++reg->v) {
    reg->t = a.read(reg->v);
    if (r.mode() == BandMode::banded) {
      if (reg->t == b.sentinel()) {
        a.write(reg->v, reg->v);
      } else if (b.is_done(reg->t)) {
        a.write(reg->v, b.undone(reg->t));
      }
    } else if (reg->t != reg->v && !b.is_name(a.read(reg->t))) {
      // Finished: the mark points one past a start, i.e. at a non-name.
      a.write(reg->v, reg->t - 1);
    }
  }
  restore_sorted_standard(r, regs);
}

namespace {

struct Collector {
  DfsEventStream* out;
  void preprocess(Vertex v) { out->push_back(DfsEvent::pre(v)); }
  void postprocess(Vertex v) { out->push_back(DfsEvent::post(v)); }
  void preexplore(Vertex u, Vertex v) { out->push_back(DfsEvent::pre_explore(u, v)); }
  void postexplore(Vertex u, Vertex v) { out->push_back(DfsEvent::post_explore(u, v)); }
};

}  // namespace

DfsEventStream dfs_run(WordArray& a, const DfsOptions& options, RegisterFile& regs,
                       DfsProbe* probe) {
  DfsEventStream events;
  Collector hooks{&events};
  dfs_run(a, options, hooks, regs, probe);
  return events;
}

DfsEventStream dfs_run(WordArray& a, const DfsOptions& options) {
  RegisterFile regs;
  return dfs_run(a, options, regs);
}

DfsEventStream dfs_run_explore(WordArray& a, DfsOptions options, RegisterFile& regs) {
  options.explore = true;
  return dfs_run(a, options, regs);
}

}  // namespace ipg
