#pragma once

// In-place, linear-time transformations between the sorted standard
// representation and the (swapped) begin-pointer representations.
//
// begin-pointer:          adjacency entries naming x are replaced by x's array
//                         start T[x]; a degree-zero x gets T[x] = x.
// swapped begin-pointer:  additionally the first cell of each array holds the
//                         vertex name and T[v] holds v's first adjacency value.
//
// In banded mode references to degree-zero vertices are written as
// x + (n+L+2) instead of the bare name, so inside adjacency arrays a value in
// [1, n] only ever occurs at an array start.

#include <cstddef>
#include <string_view>

#include "ipg/graph.hpp"
#include "ipg/ram.hpp"

namespace ipg {

enum class RepresentationTag {
  sorted_standard,
  begin_pointer,
  swapped_begin_pointer,
  shifted,
};

enum class BandMode { banded, strict };

std::string_view tag_name(RepresentationTag tag);

enum class Band {
  names,
  positions,
  sentinel,
  deg0ref,
  done_pos,
  done_deg0,
  none,
};

// Disjoint value ranges used by the transformations and the DFS:
//
//   names     [1, n]
//   positions [n+2, n+L+1]
//   sentinel  n+L+2
//   deg0ref   [n+L+3, 2n+L+2]      x + (n+L+2)
//   done_pos  [2n+L+3, 2n+2L+2]    position + (n+L+1)
//   done_deg0 [2n+2L+4, 3n+2L+3]   deg0ref + (n+L+1)
struct Bands {
  Word n = 0;
  Word total_length = 0;

  constexpr Word first() const noexcept { return n + 2; }
  constexpr Word last() const noexcept { return n + total_length + 1; }
  constexpr Word sentinel() const noexcept { return n + total_length + 2; }
  constexpr Word done_offset() const noexcept { return n + total_length + 1; }

  constexpr bool is_name(Word x) const noexcept { return x >= 1 && x <= n; }
  constexpr bool is_position(Word x) const noexcept {
    return x >= first() && x <= last();
  }
  constexpr bool is_deg0ref(Word x) const noexcept {
    return x > sentinel() && x <= sentinel() + n;
  }
  constexpr bool is_done(Word x) const noexcept {
    return (x >= first() + done_offset() && x <= last() + done_offset()) ||
           (x > sentinel() + done_offset() && x <= sentinel() + n + done_offset());
  }

  constexpr Word deg0ref(Word name) const noexcept { return name + sentinel(); }
  constexpr Word deg0ref_name(Word ref) const noexcept { return ref - sentinel(); }
  constexpr Word done(Word ref) const noexcept { return ref + done_offset(); }
  constexpr Word undone(Word mark) const noexcept { return mark - done_offset(); }

  Band classify(Word x) const noexcept;
};

// An array together with the representation it currently satisfies.
class Representation {
 public:
  explicit Representation(WordArray& a, BandMode mode = BandMode::banded,
                          RepresentationTag tag = RepresentationTag::sorted_standard);

  WordArray& array() noexcept { return *array_; }
  const WordArray& array() const noexcept { return *array_; }
  const Bands& bands() const noexcept { return bands_; }
  BandMode mode() const noexcept { return mode_; }
  RepresentationTag tag() const noexcept { return tag_; }

  void require(RepresentationTag expected, std::string_view operation) const;
  void set_tag(RepresentationTag tag) noexcept { tag_ = tag; }

 private:
  WordArray* array_;
  Bands bands_;
  BandMode mode_;
  RepresentationTag tag_;
};

// Access bounds per call, asserted by the tests (N = n + L + 2):
//   to_begin_pointer, swap, unswap          reads + writes <= 6N
//   restore_sorted_standard from swapped    reads + writes <= 6N
//   restore_sorted_standard from unswapped  reads + writes <= 10N
void to_begin_pointer(Representation& r, RegisterFile& regs);
void swap_representation(Representation& r, RegisterFile& regs);
void unswap_representation(Representation& r, RegisterFile& regs);
void restore_sorted_standard(Representation& r, RegisterFile& regs);

void to_begin_pointer(Representation& r);
void swap_representation(Representation& r);
void unswap_representation(Representation& r);
void restore_sorted_standard(Representation& r);

// Checks the cell-level conventions of `tag` (uncounted reads).
ValidationReport check_representation(const WordArray& a, RepresentationTag tag,
                                      BandMode mode);

}  // namespace ipg
