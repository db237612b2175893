#include "ipg/representation.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace ipg {

std::string_view tag_name(RepresentationTag tag) {
  switch (tag) {
    case RepresentationTag::sorted_standard: return "sorted standard";
    case RepresentationTag::begin_pointer: return "begin-pointer";
    case RepresentationTag::swapped_begin_pointer: return "swapped begin-pointer";
    case RepresentationTag::shifted: return "shifted";
  }
  return "unknown";
}

Band Bands::classify(Word x) const noexcept {
  if (is_name(x)) return Band::names;
  if (is_position(x)) return Band::positions;
  if (x == sentinel()) return Band::sentinel;
  if (is_deg0ref(x)) return Band::deg0ref;
  if (x >= first() + done_offset() && x <= last() + done_offset()) return Band::done_pos;
  if (x > sentinel() + done_offset() && x <= sentinel() + n + done_offset()) {
    return Band::done_deg0;
  }
  return Band::none;
}

Representation::Representation(WordArray& a, BandMode mode, RepresentationTag tag)
    : array_(&a), mode_(mode), tag_(tag) {
  const GraphHeader h = read_header(a, true);
  bands_ = Bands{h.n, h.total_length};
}

void Representation::require(RepresentationTag expected,
                             std::string_view operation) const {
  if (tag_ != expected) {
    throw RepresentationError(std::string(operation) + " requires the " +
                              std::string(tag_name(expected)) +
                              " representation, array is " +
                              std::string(tag_name(tag_)));
  }
}

namespace {

struct TransformRegisters {
  Word i;
  Word v;
  Word x;
  Word t;
  Word next;
};

}  // namespace

void to_begin_pointer(Representation& r, RegisterFile& regs) {
  r.require(RepresentationTag::sorted_standard, "to_begin_pointer");
  WordArray& a = r.array();
  const Bands& b = r.bands();
  const bool banded = r.mode() == BandMode::banded;
  Registers<TransformRegisters> reg(regs);

  // Entries first; the pointer table still holds every array start here.
  for (reg->i = b.first(); reg->i <= b.last(); ++reg->i) {
    reg->x = a.read(reg->i);
    reg->t = a.read(reg->x);
    reg->next = reg->x < b.n ? a.read(reg->x + 1) : b.sentinel();
    if (reg->t == reg->next) {
      if (banded) a.write(reg->i, b.deg0ref(reg->x));
    } else {
      a.write(reg->i, reg->t);
    }
  }
  // Ascending, so T[v+1] is still the original when deg(v) is decided.
  reg->t = a.read(1);
  for (reg->v = 1; reg->v <= b.n; ++reg->v) {
    reg->next = reg->v < b.n ? a.read(reg->v + 1) : b.sentinel();
    if (reg->t == reg->next) a.write(reg->v, reg->v);
    reg->t = reg->next;
  }
  r.set_tag(RepresentationTag::begin_pointer);
}

void swap_representation(Representation& r, RegisterFile& regs) {
  r.require(RepresentationTag::begin_pointer, "swap_representation");
  WordArray& a = r.array();
  const Bands& b = r.bands();
  Registers<TransformRegisters> reg(regs);
  for (reg->v = 1; reg->v <= b.n; ++reg->v) {
    reg->t = a.read(reg->v);
    if (reg->t == reg->v) continue;
    a.write(reg->v, a.read(reg->t));
    a.write(reg->t, reg->v);
  }
  r.set_tag(RepresentationTag::swapped_begin_pointer);
}

void unswap_representation(Representation& r, RegisterFile& regs) {
  r.require(RepresentationTag::swapped_begin_pointer, "unswap_representation");
  WordArray& a = r.array();
  const Bands& b = r.bands();
  Registers<TransformRegisters> reg(regs);
  for (reg->i = b.first(); reg->i <= b.last(); ++reg->i) {
    reg->x = a.read(reg->i);
    if (!b.is_name(reg->x)) continue;
    reg->t = a.read(reg->x);
    if (reg->t == reg->x) continue;  // strict mode: name of a degree-zero vertex
    a.write(reg->i, reg->t);
    a.write(reg->x, reg->i);
  }
  r.set_tag(RepresentationTag::begin_pointer);
}

void restore_sorted_standard(Representation& r, RegisterFile& regs) {
  if (r.tag() == RepresentationTag::begin_pointer) swap_representation(r, regs);
  r.require(RepresentationTag::swapped_begin_pointer, "restore_sorted_standard");
  WordArray& a = r.array();
  const Bands& b = r.bands();
  const bool banded = r.mode() == BandMode::banded;
  Registers<TransformRegisters> reg(regs);

  // 1. First adjacency values in T become names. Array starts still hold
  //    names, so a position decodes with one lookup.
  for (reg->v = 1; reg->v <= b.n; ++reg->v) {
    reg->t = a.read(reg->v);
    if (b.is_name(reg->t)) continue;
    if (b.is_position(reg->t)) {
      reg->x = a.read(reg->t);
      if (!b.is_name(reg->x)) throw CorruptionError("pointer to a non-start cell", reg->v);
      a.write(reg->v, reg->x);
    } else if (b.is_deg0ref(reg->t)) {
      a.write(reg->v, b.deg0ref_name(reg->t));
    } else {
      throw CorruptionError("pointer-table value " + std::to_string(reg->t) +
                                " outside every band",
                            reg->v);
    }
  }
  // 2. Non-first entries become name + (n+L+2) so starts stay distinguishable.
  for (reg->i = b.first(); reg->i <= b.last(); ++reg->i) {
    reg->x = a.read(reg->i);
    if (b.is_name(reg->x)) {
      if (!banded && a.read(reg->x) == reg->x) a.write(reg->i, b.deg0ref(reg->x));
    } else if (b.is_position(reg->x)) {
      reg->t = a.read(reg->x);
      if (!b.is_name(reg->t)) throw CorruptionError("pointer to a non-start cell", reg->i);
      a.write(reg->i, b.deg0ref(reg->t));
    } else if (!b.is_deg0ref(reg->x)) {
      throw CorruptionError("adjacency value " + std::to_string(reg->x) +
                                " outside every band",
                            reg->i);
    }
  }
  // 3. Unswap at each start and strip the offset elsewhere.
  for (reg->i = b.first(); reg->i <= b.last(); ++reg->i) {
    reg->x = a.read(reg->i);
    if (b.is_name(reg->x)) {
      a.write(reg->i, a.read(reg->x));
      a.write(reg->x, reg->i);
    } else {
      a.write(reg->i, b.deg0ref_name(reg->x));
    }
  }
  // 4. Degree-zero vertices point at the next array start (or one past the end).
  reg->next = b.sentinel();
  for (reg->v = b.n; reg->v >= 1; --reg->v) {
    reg->t = a.read(reg->v);
    if (reg->t == reg->v) {
      a.write(reg->v, reg->next);
    } else {
      reg->next = reg->t;
    }
  }
  r.set_tag(RepresentationTag::sorted_standard);
}

void to_begin_pointer(Representation& r) {
  RegisterFile regs;
  to_begin_pointer(r, regs);
}

void swap_representation(Representation& r) {
  RegisterFile regs;
  swap_representation(r, regs);
}

void unswap_representation(Representation& r) {
  RegisterFile regs;
  unswap_representation(r, regs);
}

void restore_sorted_standard(Representation& r) {
  RegisterFile regs;
  restore_sorted_standard(r, regs);
}

namespace {

void check_pointer_layout(const WordArray& a, const Bands& b, RepresentationTag tag,
                          BandMode mode, ValidationReport& report) {
  auto fail = [&](std::size_t i, std::string msg) {
    report.violations.push_back({i, std::move(msg)});
  };
  const bool swapped = tag == RepresentationTag::swapped_begin_pointer;
  const Word n = b.n;

  // Array starts, in vertex order, and the degree-zero set.
  std::vector<Word> start(n + 1, 0);
  std::vector<bool> deg0(n + 1, false);
  for (Word v = 1; v <= n; ++v) deg0[v] = a.peek(v) == v;
  if (swapped) {
    Word prev = 0;
    for (Word i = b.first(); i <= b.last(); ++i) {
      const Word x = a.peek(i);
      if (!b.is_name(x)) continue;
      if (mode == BandMode::strict && deg0[x]) continue;
      if (deg0[x]) {
        fail(i, "degree-zero vertex " + std::to_string(x) + " owns an array");
        continue;
      }
      if (x <= prev) fail(i, "array starts out of vertex order");
      prev = x;
      start[x] = i;
    }
    if (b.total_length > 0 && !b.is_name(a.peek(b.first()))) {
      fail(b.first(), "first adjacency cell does not hold a vertex name");
    }
  } else {
    Word prev = 0;
    for (Word v = 1; v <= n; ++v) {
      if (deg0[v]) continue;
      const Word t = a.peek(v);
      if (!b.is_position(t)) {
        fail(v, "pointer " + std::to_string(t) + " is not an adjacency position");
        continue;
      }
      if (t <= prev) fail(v, "array starts not strictly increasing");
      if (prev == 0 && t != b.first()) fail(v, "first array does not start at n+2");
      prev = t;
      start[v] = t;
    }
  }
  std::vector<bool> is_start(a.size(), false);
  for (Word v = 1; v <= n; ++v) {
    if (deg0[v]) continue;
    if (start[v] == 0) {
      fail(v, "vertex " + std::to_string(v) + " has no array start");
    } else {
      is_start[start[v]] = true;
    }
  }
  if (!report.ok()) return;

  auto check_ref = [&](std::size_t at, Word x) {
    if (b.is_position(x)) {
      if (!is_start[x]) fail(at, "pointer " + std::to_string(x) + " is not an array start");
    } else if (mode == BandMode::banded && b.is_deg0ref(x)) {
      if (!deg0[b.deg0ref_name(x)]) fail(at, "deg0ref to a vertex of positive degree");
    } else if (mode == BandMode::strict && b.is_name(x)) {
      if (!deg0[x]) fail(at, "bare name of a vertex of positive degree");
    } else {
      fail(at, "value " + std::to_string(x) + " is not a reference");
    }
  };
  for (Word i = b.first(); i <= b.last(); ++i) {
    if (swapped && is_start[i]) continue;
    check_ref(i, a.peek(i));
  }
  if (swapped) {
    for (Word v = 1; v <= n; ++v) {
      if (deg0[v]) continue;
      if (a.peek(start[v]) != v) fail(start[v], "array start does not hold its name");
      check_ref(v, a.peek(v));
    }
  }
}

}  // namespace

ValidationReport check_representation(const WordArray& a, RepresentationTag tag,
                                      BandMode mode) {
  ValidationReport report;
  if (tag == RepresentationTag::sorted_standard) return validate(a, true);
  if (tag == RepresentationTag::shifted) {
    report.violations.push_back({0, "shifted tables are checked by the packed table"});
    return report;
  }
  if (a.size() < 3 || a.peek(0) == 0 || a.peek(0) + 1 >= a.size() ||
      a.peek(0) + a.peek(a.peek(0) + 1) + 2 != a.size()) {
    report.violations.push_back({0, "inconsistent header"});
    return report;
  }
  const Bands b{a.peek(0), a.peek(a.peek(0) + 1)};
  check_pointer_layout(a, b, tag, mode, report);
  return report;
}

}  // namespace ipg
