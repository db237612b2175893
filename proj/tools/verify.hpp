#pragma once

// Randomized trial used by `ipg verify`: every traversal against the oracles,
// with a snapshot comparison after each run.

#include <string>

#include "ipg/corpus.hpp"

namespace ipg::cli {

enum class TrialFailure { none, restore, oracle, corruption };

struct TrialResult {
  TrialFailure failure = TrialFailure::none;
  std::string detail;
};

TrialResult run_trial(const CorpusCase& c);

// Trial on a given sorted standard array, DFS and BFS single runs from start.
TrialResult run_trial(const WordArray& a, bool directed, Vertex start);

}  // namespace ipg::cli
