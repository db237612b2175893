#pragma once

// Shared fixtures and instrumented checkers for the test binaries.

#include <string>
#include <vector>

#include "ipg/dfs.hpp"
#include "ipg/graph.hpp"
#include "ipg/ram.hpp"
#include "ipg/representation.hpp"

namespace ipg::test {

// The 5-vertex undirected example graph and its three printed layouts.
EdgeList sample_edges();
std::vector<Word> sorted_words();
std::vector<Word> begin_pointer_words();
std::vector<Word> swapped_words();

// Directed 3-vertex graph with edges (1,2), (1,3).
EdgeList directed3_edges();

WordArray array_of(const std::vector<Word>& words, unsigned width = 16);
std::vector<Word> words_of(const WordArray& a);

struct EventRecorder {
  DfsEventStream events;
  void preprocess(Vertex v) { events.push_back(DfsEvent::pre(v)); }
  void postprocess(Vertex v) { events.push_back(DfsEvent::post(v)); }
};

std::string format(const DfsEventStream& events);

// Checks the three strict-mode traversal invariants and the done-mark rule at
// every follow/backtrack boundary. Degree-zero vertices are outside the
// invariants (strict mode only meets them as isolated starts).
class StrictInvariantChecker : public DfsProbe {
 public:
  void on_component(const WordArray& a, Vertex start) override;
  void on_visit(const WordArray& a, Word q, Vertex v) override;
  void before_follow(const WordArray& a, Word p, Vertex v) override;
  void after_follow(const WordArray& a, Word p, Vertex v) override;
  void before_backtrack(const WordArray& a, Word q, Vertex v, Word p) override;
  void after_backtrack(const WordArray& a, Word q, Vertex v, Word p) override;
  void on_component_done(const WordArray& a, Vertex start) override;

  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t checks() const { return checks_; }

 private:
  void check_all(const WordArray& a, const char* where);
  void fail(const std::string& msg);
  bool on_path(Vertex v) const;

  std::vector<Word> initial_;  // swapped begin-pointer state before the traversal
  std::size_t n_ = 0;
  Bands bands_;
  std::vector<bool> visited_;
  std::vector<bool> finished_;
  std::vector<Word> array_start_;  // 0 for degree zero
  std::vector<Word> array_end_;
  std::vector<Vertex> path_;
  std::vector<std::string> failures_;
  std::size_t checks_ = 0;
};

// Records every write that leaves the T or adjacency region outside the six
// value bands.
class BandClosureWatch {
 public:
  BandClosureWatch(WordArray& a, const Bands& b);
  ~BandClosureWatch();

  std::size_t writes() const { return writes_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  WordArray& a_;
  Bands b_;
  std::size_t writes_ = 0;
  std::vector<std::string> violations_;
};

}  // namespace ipg::test
