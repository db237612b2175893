#pragma once

// Instrumented word RAM: a fixed-width word array with access counters, a
// content digest for restore checks, and a cooperative register file that
// bounds the working memory of the in-place algorithms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "ipg/errors.hpp"

namespace ipg {

using Word = std::uint64_t;

inline constexpr unsigned kMinWidth = 8;
inline constexpr unsigned kMaxWidth = 64;

// Working-memory budget in words for every in-place algorithm.
inline constexpr std::size_t kRegisterBudget = 64;

struct AccessStats {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  std::size_t peak_registers = 0;
};

struct Digest {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const Digest&, const Digest&) = default;
};

class WordArray {
 public:
  using WriteObserver = std::function<void(std::size_t, Word)>;

  WordArray() = default;
  WordArray(unsigned width, std::size_t size);
  WordArray(unsigned width, std::vector<Word> words);

  unsigned width() const noexcept { return width_; }
  std::size_t size() const noexcept { return words_.size(); }
  Word max_value() const noexcept { return mask_; }

  Word read(std::size_t i) const {
    check_index(i);
    ++stats_.reads;
    return words_[i];
  }

  void write(std::size_t i, Word v) {
    check_index(i);
    if (v > mask_) overflow(i, v);
    ++stats_.writes;
    words_[i] = v;
    if (observer_) observer_(i, v);
  }

  // Uncounted access for harness code (snapshots, checkers, serialization).
  Word peek(std::size_t i) const {
    check_index(i);
    return words_[i];
  }
  std::span<const Word> words() const noexcept { return words_; }

  const AccessStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }

  // Called after every counted write; test builds use it to check bands.
  void set_write_observer(WriteObserver observer) {
    observer_ = std::move(observer);
  }

  friend bool operator==(const WordArray& a, const WordArray& b) {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= words_.size()) out_of_bounds(i);
  }
  [[noreturn]] void out_of_bounds(std::size_t i) const;
  [[noreturn]] void overflow(std::size_t i, Word v) const;

  unsigned width_ = kMaxWidth;
  Word mask_ = ~Word{0};
  std::vector<Word> words_;
  mutable AccessStats stats_;
  WriteObserver observer_;
};

// Deterministic fingerprint of (width, words); uncounted.
Digest snapshot(const WordArray& a);

// Tracks live algorithm-local words against a fixed budget.
class RegisterFile {
 public:
  explicit RegisterFile(std::size_t budget = kRegisterBudget);

  void acquire(std::size_t words);
  void release(std::size_t words) noexcept;

  std::size_t budget() const noexcept { return budget_; }
  std::size_t live() const noexcept { return live_; }
  std::size_t peak() const noexcept { return peak_; }

 private:
  std::size_t budget_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

// RAII lease of `count` register words.
class RegisterLease {
 public:
  RegisterLease(RegisterFile& file, std::size_t count)
      : file_(&file), count_(count) {
    file_->acquire(count_);
  }
  RegisterLease(const RegisterLease&) = delete;
  RegisterLease& operator=(const RegisterLease&) = delete;
  ~RegisterLease() { file_->release(count_); }

  std::size_t count() const noexcept { return count_; }

 private:
  RegisterFile* file_;
  std::size_t count_;
};

template <class T>
inline constexpr std::size_t register_words_v =
    (sizeof(T) + sizeof(Word) - 1) / sizeof(Word);

// A block of algorithm-local state accounted against the register file.
template <class T>
class Registers {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  explicit Registers(RegisterFile& file, T init = {})
      : lease_(file, register_words_v<T>), value_(init) {}

  T& operator*() noexcept { return value_; }
  const T& operator*() const noexcept { return value_; }
  T* operator->() noexcept { return &value_; }
  const T* operator->() const noexcept { return &value_; }

 private:
  RegisterLease lease_;
  T value_;
};

// Word buffer carved out of the register budget (constant-size scratch).
class ScratchWords {
 public:
  ScratchWords(RegisterFile& file, std::size_t count)
      : lease_(file, count), words_(count, 0) {}

  std::span<Word> words() noexcept { return words_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

 private:
  RegisterLease lease_;
  std::vector<Word> words_;
};

template <class R>
struct Budgeted {
  R result;
  AccessStats stats;
};

template <>
struct Budgeted<void> {
  AccessStats stats;
};

// Runs `fn(RegisterFile&)` under `budget` words of working memory. Throws
// BudgetViolation as soon as the computation's live registers exceed it.
// When an array is given, its read/write counters are reported as deltas.
template <class F>
auto run_budgeted(std::size_t budget, F&& fn, const WordArray* array = nullptr)
    -> Budgeted<std::invoke_result_t<F, RegisterFile&>> {
  using R = std::invoke_result_t<F, RegisterFile&>;
  if (budget < 1) throw ParameterError("register budget must be at least 1");
  RegisterFile regs(budget);
  AccessStats before;
  if (array != nullptr) before = array->stats();
  auto finish = [&] {
    AccessStats s;
    if (array != nullptr) {
      s.reads = array->stats().reads - before.reads;
      s.writes = array->stats().writes - before.writes;
    }
    s.peak_registers = regs.peak();
    return s;
  };
  if constexpr (std::is_void_v<R>) {
    std::forward<F>(fn)(regs);
    return Budgeted<void>{finish()};
  } else {
    R result = std::forward<F>(fn)(regs);
    return Budgeted<R>{std::move(result), finish()};
  }
}

template <class F>
auto run_budgeted(const WordArray& array, std::size_t budget, F&& fn) {
  return run_budgeted(budget, std::forward<F>(fn), &array);
}

}  // namespace ipg
