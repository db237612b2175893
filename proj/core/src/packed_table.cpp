#include "ipg/packed_table.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ipg {

namespace {

constexpr Word low_mask(unsigned len) {
  return len >= 64 ? ~Word{0} : (Word{1} << len) - 1;
}

}  // namespace

Word BitStore::read_bits(std::size_t offset, unsigned len) const {
  if (len > width_) {
    const Word lo = read_bits(offset, width_);
    return lo | (read_bits(offset + width_, len - width_) << width_);
  }
  const std::size_t k = offset / width_;
  const unsigned s = static_cast<unsigned>(offset % width_);
  Word v = word(k) >> s;
  if (s + len > width_) v |= word(k + 1) << (width_ - s);
  return v & low_mask(len);
}

void BitStore::write_bits(std::size_t offset, unsigned len, Word value) {
  if (len > width_) {
    write_bits(offset, width_, value);
    write_bits(offset + width_, len - width_, value >> width_);
    return;
  }
  const std::size_t k = offset / width_;
  const unsigned s = static_cast<unsigned>(offset % width_);
  const Word word_mask = low_mask(width_);
  const unsigned here = std::min(len, width_ - s);
  const Word m = low_mask(here) << s;
  set_word(k, ((word(k) & ~m) | ((value << s) & m)) & word_mask);
  if (here < len) {
    const Word m2 = low_mask(len - here);
    set_word(k + 1, (word(k + 1) & ~m2) | ((value >> here) & m2));
  }
}

unsigned PackedTable::footer_entry_bits(std::size_t n, unsigned w) noexcept {
  return std::max<unsigned>(w, static_cast<unsigned>(std::bit_width(n + 1)));
}

bool PackedTable::fits(std::size_t n, unsigned w, unsigned c) noexcept {
  return c < 8 && n >= (std::size_t{1} << (c + 1)) * footer_entry_bits(n, w);
}

PackedTable::PackedTable(WordArray& a, std::size_t n, RegisterFile& regs, unsigned c)
    : a_(&a), regs_(&regs), n_(n), c_(c) {
  if (c < 1 || c > 4) throw ParameterError("packing parameter c must be in [1, 4]");
  if (a.width() <= c + 1) {
    throw ParameterError("word width " + std::to_string(a.width()) +
                         " too small for c = " + std::to_string(c));
  }
  if (n + 1 > a.size()) throw BoundsError("table of " + std::to_string(n) + " words exceeds the array");
  field_width_ = a.width() - c_prime();
  entry_bits_ = footer_entry_bits(n, a.width());

  if (!fits(n, a.width(), c)) {
    // Too small to pack: the free bits live in scratch words instead.
    fallback_ = true;
    const std::size_t bits = ChoiceDictionary::bits_needed(n, 64);
    scratch_.emplace(regs, (bits + 63) / 64);
    store_ = BitStore(scratch_->words());
    free_begin_ = 0;
    free_end_ = scratch_->size() * 64;
    return;
  }

  const std::size_t footer = footer_words();
  starts_.emplace(regs, footer);
  std::span<Word> starts = starts_->words();
  struct Regs {
    Word i;
    Word value;
    Word prev;
    Word prefix;
    Word t;
  };
  Registers<Regs> r(regs);
  BitStore bits(a, 1);

  // Forward: field i ends inside word i, which has already been read.
  r->prev = 0;
  r->t = 1;
  for (r->i = 1; r->i <= n; ++r->i) {
    r->value = a.read(r->i);
    if (r->value < r->prev) {
      throw ParameterError("table is not non-decreasing at index " + std::to_string(r->i));
    }
    r->prev = r->value;
    r->prefix = r->value >> field_width_;
    while (r->t <= r->prefix) starts[r->t++] = r->i;
    bits.write_bits(field_width_ * (r->i - 1), field_width_, r->value & low_mask(field_width_));
  }
  while (r->t < footer) starts[r->t++] = n + 1;
  starts[0] = c_prime();

  free_begin_ = n * field_width_;
  free_end_ = footer_begin();
  // Zero the free bits one word-sized chunk at a time, then write the footer.
  for (r->i = free_begin_; r->i < free_end_; r->i += r->t) {
    r->t = std::min<Word>(a.width(), free_end_ - r->i);
    bits.write_bits(r->i, static_cast<unsigned>(r->t), 0);
  }
  for (r->t = 0; r->t < footer; ++r->t) {
    bits.write_bits(free_end_ + r->t * entry_bits_, entry_bits_, starts[r->t]);
  }

  store_ = bits;
  packed_ = true;
}

std::size_t PackedTable::region_prefix(std::size_t i) const {
  const std::span<const Word> starts = starts_->words();
  // Largest t >= 1 with starts[t] <= i; starts are non-decreasing.
  const auto it = std::upper_bound(starts.begin() + 1, starts.end(), Word{i});
  return static_cast<std::size_t>(it - (starts.begin() + 1));
}

Word PackedTable::read(std::size_t i) const {
  if (i < 1 || i > n_) {
    throw BoundsError("table index " + std::to_string(i) + " outside [1, " +
                      std::to_string(n_) + "]");
  }
  if (!packed_) return a_->read(i);
  const Word field = store_.read_bits(field_width_ * (i - 1), field_width_);
  return (Word{region_prefix(i)} << field_width_) | field;
}

void PackedTable::unpack() {
  if (!packed_) {
    scratch_.reset();
    fallback_ = false;
    return;
  }
  const std::size_t footer = footer_words();
  std::span<Word> starts = starts_->words();
  // Reload from the array: the footer there is authoritative.
  BitStore bits(*a_, 1);
  const std::size_t begin = footer_begin();
  for (std::size_t t = 0; t < footer; ++t) {
    starts[t] = bits.read_bits(begin + t * entry_bits_, entry_bits_);
  }
  const std::size_t cell = 1 + begin / a_->width();
  if (starts[0] != c_prime()) {
    throw CorruptionError("packed footer does not record c' = " + std::to_string(c_prime()),
                          cell);
  }
  for (std::size_t t = 1; t < footer; ++t) {
    if (starts[t] < 1 || starts[t] > n_ + 1 || (t > 1 && starts[t] < starts[t - 1])) {
      throw CorruptionError("packed footer region starts are inconsistent",
                            1 + (begin + t * entry_bits_) / a_->width());
    }
  }
  // Backward: word i only holds fields >= i (and free or footer bits).
  Registers<Word> i(*regs_);
  for (*i = n_; *i >= 1; --*i) {
    a_->write(*i, (Word{region_prefix(*i)} << field_width_) |
                      bits.read_bits(field_width_ * (*i - 1), field_width_));
  }
  packed_ = false;
  starts_.reset();
}

}  // namespace ipg
