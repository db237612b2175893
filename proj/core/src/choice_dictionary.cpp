#include <algorithm>
#include <bit>
#include <string>

#include "ipg/packed_table.hpp"

namespace ipg {

namespace {

constexpr Word kLowBits = 0x5555555555555555ULL;

constexpr Word low_mask(unsigned len) {
  return len >= 64 ? ~Word{0} : (Word{1} << len) - 1;
}

std::size_t block_size(unsigned store_width) { return store_width / 2; }

}  // namespace

std::size_t ChoiceDictionary::bits_needed(std::size_t n, unsigned store_width) noexcept {
  const std::size_t b = block_size(store_width);
  return 2 * n + 2 * ((n + b - 1) / b);
}

ChoiceDictionary::ChoiceDictionary(const PackedTable& table, RegisterFile& regs)
    : store_(table.free_store()), s_(regs) {
  const std::size_t n = table.n();
  if (bits_needed(n, store_.width()) > table.free_capacity()) {
    throw ParameterError("choice dictionary needs " +
                         std::to_string(bits_needed(n, store_.width())) + " bits, " +
                         std::to_string(table.free_capacity()) + " are free");
  }
  s_->n = n;
  s_->base = table.free_begin();
  s_->block = block_size(store_.width());
  s_->blocks = (n + s_->block - 1) / s_->block;
  s_->summary = s_->base + 2 * n;
  for (std::size_t i = 0; i < 2; ++i) {
    s_->cursor[i] = 0;
    s_->count[i] = 0;
    s_->low[i] = s_->blocks;
  }
  // Freed bits start zeroed (all white, empty summaries) in packed mode; the
  // scratch fallback is zero-initialized as well.
}

unsigned ChoiceDictionary::block_bits(std::size_t k) const {
  const std::size_t first = k * s_->block;
  const std::size_t count = std::min(s_->block, s_->n - first);
  return static_cast<unsigned>(2 * count);
}

Color ChoiceDictionary::color(std::size_t v) const {
  if (v < 1 || v > s_->n) {
    throw BoundsError("vertex " + std::to_string(v) + " outside [1, " +
                      std::to_string(s_->n) + "]");
  }
  return static_cast<Color>(store_.read_bits(s_->base + 2 * (v - 1), 2));
}

// First vertex of color q in block k.
std::optional<std::size_t> ChoiceDictionary::find_in_block(std::size_t k, Color q) const {
  const unsigned len = block_bits(k);
  const Word x = store_.read_bits(s_->base + 2 * k * s_->block, len);
  const Word y = x ^ (kLowBits * static_cast<Word>(q));
  const Word hits = ~(y | (y >> 1)) & kLowBits & low_mask(len);
  if (hits == 0) return std::nullopt;
  return k * s_->block + static_cast<std::size_t>(std::countr_zero(hits)) / 2 + 1;
}

// First block in [from, to) whose summary bit for q is set.
std::optional<std::size_t> ChoiceDictionary::find_summary(Color q, std::size_t from,
                                                          std::size_t to) const {
  const unsigned w = store_.width();
  while (from < to) {
    const unsigned len = static_cast<unsigned>(std::min<std::size_t>(w, to - from));
    const Word chunk = store_.read_bits(summary_bit(q, from), len);
    if (chunk != 0) return from + static_cast<std::size_t>(std::countr_zero(chunk));
    from += len;
  }
  return std::nullopt;
}

void ChoiceDictionary::set_color(std::size_t v, Color q) {
  const Color old = color(v);
  if (old == q) return;
  store_.write_bits(s_->base + 2 * (v - 1), 2, static_cast<Word>(q));
  const std::size_t k = (v - 1) / s_->block;
  if (is_frontier(old)) {
    if (!find_in_block(k, old)) store_.write_bits(summary_bit(old, k), 1, 0);
    if (--s_->count[slot(old)] == 0) s_->low[slot(old)] = s_->blocks;
  }
  if (is_frontier(q)) {
    store_.write_bits(summary_bit(q, k), 1, 1);
    ++s_->count[slot(q)];
    s_->low[slot(q)] = std::min(s_->low[slot(q)], k);
  }
}

std::size_t ChoiceDictionary::count(Color q) const {
  if (!is_frontier(q)) throw ParameterError("counts are kept for the frontier colors only");
  return s_->count[slot(q)];
}

std::optional<std::size_t> ChoiceDictionary::choice(Color q) {
  if (!is_frontier(q)) {
    for (std::size_t k = 0; k < s_->blocks; ++k) {
      if (auto v = find_in_block(k, q)) return v;
    }
    return std::nullopt;
  }
  if (s_->count[slot(q)] == 0) return std::nullopt;
  std::size_t& cursor = s_->cursor[slot(q)];
  std::optional<std::size_t> k = find_summary(q, cursor, s_->blocks);
  if (!k) k = find_summary(q, 0, cursor);
  if (!k) return std::nullopt;
  cursor = *k;
  return find_in_block(*k, q);
}

void ChoiceDictionary::reset_cursor(Color q) {
  if (is_frontier(q)) s_->cursor[slot(q)] = std::min(s_->low[slot(q)], s_->blocks);
}

}  // namespace ipg
