#pragma once

// In-place packing of the non-decreasing table T = A[1..n].
//
// Each value is split into its top c' = c + 1 bits (the prefix) and the
// remaining w - c' bits (the field). Fields are stored back to back from bit 0
// of the T region (little-endian bit order, A[1] holds bits [0, w)). Since T
// is sorted, the prefix only changes at most 2^c' - 1 times; the last 2^c'
// entries of the region record c' and, for t = 1 .. 2^c' - 1, the first index
// whose prefix is >= t. Everything between the fields and that footer is free:
//
//   [ fields: n (w - c') bits | free | footer: 2^c' entries of e bits ]
//
// with e = w, which leaves c'n - 2^c' w >= cn bits when n >= 2^(c+1) w. A
// table whose indices do not fit in w bits (n >= 2^w) uses e = bit_width(n+1)
// and needs n >= 2^(c+1) e instead. Smaller tables
// are not packed; the dictionary bits then come from a scratch buffer leased
// from the register file (under 2^(c+1) w * 3 bits).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "ipg/ram.hpp"

namespace ipg {

// Bit-addressed view over either the array's T region or a scratch buffer.
class BitStore {
 public:
  BitStore() = default;
  BitStore(WordArray& a, std::size_t first_index)
      : array_(&a), width_(a.width()), first_(first_index) {}
  explicit BitStore(std::span<Word> scratch) : scratch_(scratch), width_(64) {}

  unsigned width() const noexcept { return width_; }

  // len <= 64.
  Word read_bits(std::size_t offset, unsigned len) const;
  void write_bits(std::size_t offset, unsigned len, Word value);

 private:
  Word word(std::size_t k) const {
    return array_ ? array_->read(first_ + k) : scratch_[k];
  }
  void set_word(std::size_t k, Word v) {
    if (array_) {
      array_->write(first_ + k, v);
    } else {
      scratch_[k] = v;
    }
  }

  WordArray* array_ = nullptr;
  std::span<Word> scratch_;
  unsigned width_ = 64;
  std::size_t first_ = 0;
};

class PackedTable {
 public:
  static constexpr unsigned kDefaultC = 3;

  // Whether a table of n words of width w can be packed with parameter c.
  static bool fits(std::size_t n, unsigned w, unsigned c) noexcept;

  // Bits per footer entry: w, or more when an index n+1 does not fit in w
  // bits (only possible for tables that are not graph pointer tables).
  static unsigned footer_entry_bits(std::size_t n, unsigned w) noexcept;

  // Packs A[1..n]. Requires 1 <= c <= 4, w - (c+1) >= 1 and a non-decreasing
  // table. Falls back to scratch storage when the table is too small.
  PackedTable(WordArray& a, std::size_t n, RegisterFile& regs, unsigned c = kDefaultC);
  PackedTable(const PackedTable&) = delete;
  PackedTable& operator=(const PackedTable&) = delete;

  std::size_t n() const noexcept { return n_; }
  unsigned c() const noexcept { return c_; }
  unsigned c_prime() const noexcept { return c_ + 1; }
  unsigned field_width() const noexcept { return field_width_; }
  std::size_t footer_words() const noexcept { return std::size_t{1} << c_prime(); }
  // First footer bit: the footer fills the last footer_words() entries.
  std::size_t footer_begin() const noexcept {
    return n_ * a_->width() - footer_words() * entry_bits_;
  }
  bool is_packed() const noexcept { return packed_; }
  bool uses_fallback() const noexcept { return fallback_; }

  // Original T[i], 1 <= i <= n.
  Word read(std::size_t i) const;

  // Free bits: [begin, end) of free_store().
  std::size_t free_begin() const noexcept { return free_begin_; }
  std::size_t free_end() const noexcept { return free_end_; }
  std::size_t free_capacity() const noexcept { return free_end_ - free_begin_; }
  BitStore free_store() const noexcept { return store_; }

  // Restores A[1..n] bit-exactly. Throws CorruptionError on a damaged footer.
  void unpack();

 private:
  std::size_t region_prefix(std::size_t i) const;

  WordArray* a_;
  RegisterFile* regs_;
  std::size_t n_;
  unsigned c_;
  unsigned field_width_;
  unsigned entry_bits_;
  bool packed_ = false;
  bool fallback_ = false;
  std::optional<ScratchWords> starts_;   // cached footer: first index per prefix
  std::optional<ScratchWords> scratch_;  // fallback free bits
  BitStore store_;
  std::size_t free_begin_ = 0;
  std::size_t free_end_ = 0;
};

enum class Color : std::uint8_t { white = 0, light_gray = 1, dark_gray = 2, black = 3 };

// Four-color choice dictionary in a table's free bits: a 2-bit color per
// vertex plus, for each frontier color, one summary bit per block of w/2
// vertices (set iff the block contains that color). choice() for a frontier
// color scans summaries from a cursor with wrap-around; a member count and a
// lower block bound per frontier color keep empty or sparse classes cheap.
class ChoiceDictionary {
 public:
  // Needs at least 2n + 2 ceil(n / (w/2)) free bits; all vertices start white.
  ChoiceDictionary(const PackedTable& table, RegisterFile& regs);

  static std::size_t bits_needed(std::size_t n, unsigned store_width) noexcept;

  Color color(std::size_t v) const;
  void set_color(std::size_t v, Color q);
  std::optional<std::size_t> choice(Color q);
  // Moves the cursor of q to the lowest block that may contain q, so the
  // following choices return q's members in ascending order.
  void reset_cursor(Color q);
  std::size_t count(Color q) const;

 private:
  struct State {
    std::size_t n;
    std::size_t base;       // first color bit
    std::size_t summary;    // first summary bit (light-gray, then dark-gray)
    std::size_t blocks;
    std::size_t block;      // vertices per block
    std::size_t cursor[2];  // block cursors of the frontier colors
    std::size_t count[2];   // members of each frontier color
    std::size_t low[2];     // no member of the color lies below this block
  };

  static std::size_t slot(Color q) noexcept { return q == Color::dark_gray ? 1 : 0; }

  static bool is_frontier(Color q) noexcept {
    return q == Color::light_gray || q == Color::dark_gray;
  }
  std::size_t summary_bit(Color q, std::size_t k) const {
    return s_->summary + (q == Color::dark_gray ? s_->blocks : 0) + k;
  }
  unsigned block_bits(std::size_t k) const;
  std::optional<std::size_t> find_in_block(std::size_t k, Color q) const;
  std::optional<std::size_t> find_summary(Color q, std::size_t from, std::size_t to) const;

  BitStore store_;
  Registers<State> s_;
};

}  // namespace ipg
