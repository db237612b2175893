#include "ipg/ram.hpp"

#include <string>

namespace ipg {

namespace {

Word width_mask(unsigned width) {
  if (width < kMinWidth || width > kMaxWidth) {
    throw ParameterError("word width " + std::to_string(width) +
                         " outside [8, 64]");
  }
  return width == 64 ? ~Word{0} : ((Word{1} << width) - 1);
}

}  // namespace

WordArray::WordArray(unsigned width, std::size_t size)
    : width_(width), mask_(width_mask(width)), words_(size, 0) {}

WordArray::WordArray(unsigned width, std::vector<Word> words)
    : width_(width), mask_(width_mask(width)), words_(std::move(words)) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] > mask_) overflow(i, words_[i]);
  }
}

void WordArray::out_of_bounds(std::size_t i) const {
  throw BoundsError("cell index " + std::to_string(i) +
                    " out of bounds for array of " +
                    std::to_string(words_.size()) + " words");
}

void WordArray::overflow(std::size_t i, Word v) const {
  throw OverflowError("value " + std::to_string(v) + " at index " +
                      std::to_string(i) + " does not fit in " +
                      std::to_string(width_) + " bits");
}

Digest snapshot(const WordArray& a) {
  // Two independent lanes: FNV-1a over bytes and a multiply/xorshift mix.
  std::uint64_t fnv = 0xcbf29ce484222325ULL;
  std::uint64_t mix = 0x9e3779b97f4a7c15ULL ^ a.width();
  auto feed = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      fnv ^= (x >> (8 * b)) & 0xff;
      fnv *= 0x100000001b3ULL;
    }
    mix ^= x + 0x9e3779b97f4a7c15ULL + (mix << 6) + (mix >> 2);
    mix ^= mix >> 31;
    mix *= 0xbf58476d1ce4e5b9ULL;
    mix ^= mix >> 29;
  };
  feed(a.width());
  feed(a.size());
  for (Word w : a.words()) feed(w);
  return Digest{fnv, mix};
}

RegisterFile::RegisterFile(std::size_t budget) : budget_(budget) {}

void RegisterFile::acquire(std::size_t words) {
  const std::size_t next = live_ + words;
  if (next > budget_) throw BudgetViolation(next, budget_);
  live_ = next;
  if (live_ > peak_) peak_ = live_;
}

void RegisterFile::release(std::size_t words) noexcept { live_ -= words; }

}  // namespace ipg
