#include "support.hpp"

#include <sstream>

namespace ipg::test {

EdgeList sample_edges() {
  return {5, false, {{1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}};
}

std::vector<Word> sorted_words() {
  return {5, 7, 9, 12, 14, 17, 12, 2, 5, 1, 3, 4, 2, 4, 2, 3, 5, 1, 4};
}

std::vector<Word> begin_pointer_words() {
  return {5, 7, 9, 12, 14, 17, 12, 9, 17, 7, 12, 14, 9, 14, 9, 12, 17, 7, 14};
}

std::vector<Word> swapped_words() {
  return {5, 9, 7, 9, 9, 7, 12, 1, 17, 2, 12, 14, 3, 14, 4, 12, 17, 5, 14};
}

EdgeList directed3_edges() { return {3, true, {{1, 2}, {1, 3}}}; }

WordArray array_of(const std::vector<Word>& words, unsigned width) {
  return WordArray(width, words);
}

std::vector<Word> words_of(const WordArray& a) {
  return {a.words().begin(), a.words().end()};
}

std::string format(const DfsEventStream& events) {
  std::ostringstream os;
  for (const DfsEvent& e : events) {
    if (!os.str().empty()) os << ' ';
    switch (e.kind) {
      case DfsEventKind::pre: os << "Pre" << e.v; break;
      case DfsEventKind::post: os << "Post" << e.v; break;
      case DfsEventKind::pre_explore: os << "PreEx" << e.u << ',' << e.v; break;
      case DfsEventKind::post_explore: os << "PostEx" << e.u << ',' << e.v; break;
    }
  }
  return os.str();
}

void StrictInvariantChecker::fail(const std::string& msg) {
  if (failures_.size() < 20) failures_.push_back(msg);
}

bool StrictInvariantChecker::on_path(Vertex v) const {
  for (Vertex x : path_) {
    if (x == v) return true;
  }
  return false;
}

void StrictInvariantChecker::on_component(const WordArray& a, Vertex start) {
  if (initial_.empty()) {
    initial_ = words_of(a);
    n_ = initial_[0];
    bands_ = Bands{initial_[0], initial_[n_ + 1]};
    visited_.assign(n_ + 1, false);
    finished_.assign(n_ + 1, false);
    array_start_.assign(n_ + 1, 0);
    array_end_.assign(n_ + 1, 0);
    for (Word i = bands_.first(); i <= bands_.last(); ++i) {
      if (bands_.is_name(initial_[i])) array_start_[initial_[i]] = i;
    }
    for (Vertex v = 1; v <= n_; ++v) {
      if (array_start_[v] == 0) continue;
      Word e = array_start_[v] + 1;
      while (e <= bands_.last() && !bands_.is_name(initial_[e])) ++e;
      array_end_[v] = e;
    }
  }
  if (!path_.empty()) fail("component started with a non-empty path");
  path_.clear();
  (void)start;
}

void StrictInvariantChecker::on_visit(const WordArray& a, Word q, Vertex v) {
  if (q != array_start_[v]) fail("visit of " + std::to_string(v) + " at wrong start");
  if (path_.empty()) {
    path_.push_back(v);
    visited_[v] = true;
    check_all(a, "start visit");
  } else if (path_.back() != v) {
    fail("visit of " + std::to_string(v) + " that is not the path tip");
  }
}

void StrictInvariantChecker::before_follow(const WordArray& a, Word p, Vertex v) {
  if (visited_[v]) fail("follow into visited vertex " + std::to_string(v));
  check_all(a, "before follow");
  (void)p;
}

void StrictInvariantChecker::after_follow(const WordArray& a, Word p, Vertex v) {
  if (a.peek(v) != p) fail("T[v] is not the reverse pointer after follow");
  if (a.peek(p) != initial_[v]) fail("parent slot does not hold the displaced value");
  path_.push_back(v);
  visited_[v] = true;
  check_all(a, "after follow");
}

void StrictInvariantChecker::before_backtrack(const WordArray& a, Word q, Vertex v,
                                              Word p) {
  if (path_.empty() || path_.back() != v) fail("backtrack from a vertex off the path tip");
  if (q != array_start_[v]) fail("backtrack start mismatch");
  if (a.peek(v) != p) fail("backtrack slot is not the reverse pointer");
  if (a.peek(p) != initial_[v]) fail("parent slot lost the displaced value");
  check_all(a, "before backtrack");
}

void StrictInvariantChecker::after_backtrack(const WordArray& a, Word q, Vertex v,
                                             Word p) {
  if (!path_.empty()) path_.pop_back();
  finished_[v] = true;
  if (a.peek(v) != initial_[v] + 1) {
    fail("done mark of " + std::to_string(v) + " is not displaced value + 1");
  }
  if (a.peek(p) != q) fail("parent slot does not point back at the child");
  check_all(a, "after backtrack");
}

void StrictInvariantChecker::on_component_done(const WordArray& a, Vertex start) {
  if (array_start_[start] != 0) {
    if (path_.size() != 1 || path_.back() != start) fail("path not unwound to the start");
    finished_[start] = true;
    if (a.peek(start) != initial_[start] + 1) fail("start vertex not done-marked");
  }
  path_.clear();
}

void StrictInvariantChecker::check_all(const WordArray& a, const char* where) {
  ++checks_;
  const Vertex vs = path_.empty() ? 0 : path_.front();
  for (Vertex v = 1; v <= n_; ++v) {
    if (array_start_[v] == 0) continue;
    const Word t = a.peek(v);
    const std::string tag = std::string(where) + ", vertex " + std::to_string(v) + ": ";
    const bool formula_white =
        v != vs && t < a.size() && bands_.is_name(a.peek(t));
    // Invariant 1.
    if (formula_white != !visited_[v]) fail(tag + "white predicate disagrees");
    if (!visited_[v]) {
      if (t != initial_[v]) fail(tag + "white vertex lost its first value");
      continue;
    }
    if (v == vs) continue;
    if (on_path(v)) {
      // Invariant 2: a reverse pointer into the parent's original slot.
      Vertex parent = 0;
      for (std::size_t k = 1; k < path_.size(); ++k) {
        if (path_[k] == v) parent = path_[k - 1];
      }
      const Word s = array_start_[parent];
      if (t <= s || t >= array_end_[parent]) {
        fail(tag + "reverse pointer outside the parent's array");
        continue;
      }
      if (a.peek(t) < n_) fail(tag + "reverse slot holds a name");
      const bool original = initial_[t] == array_start_[v];
      const bool exchanged = t == s + 1 && initial_[parent] == array_start_[v];
      if (!original && !exchanged) fail(tag + "reverse pointer is not the original slot");
    } else if (finished_[v]) {
      // Invariant 3: points at the second slot of an array.
      if (t != initial_[v] + 1) fail(tag + "done mark is not displaced value + 1");
      if (!bands_.is_name(a.peek(t - 1))) fail(tag + "done mark not a second slot");
    } else {
      fail(tag + "visited vertex neither on the path nor finished");
    }
  }
}

BandClosureWatch::BandClosureWatch(WordArray& a, const Bands& b) : a_(a), b_(b) {
  a_.set_write_observer([this](std::size_t i, Word v) {
    ++writes_;
    if (b_.classify(v) == Band::none && violations_.size() < 20) {
      violations_.push_back("A[" + std::to_string(i) + "] := " + std::to_string(v));
    }
  });
}

BandClosureWatch::~BandClosureWatch() { a_.set_write_observer(nullptr); }

}  // namespace ipg::test
