#include "verify.hpp"

#include <utility>

#include "ipg/bfs.hpp"
#include "ipg/dfs.hpp"
#include "ipg/oracle.hpp"
#include "ipg/representation.hpp"

namespace ipg::cli {

namespace {

class Trial {
 public:
  Trial(WordArray array, bool directed, Vertex start)
      : edges_(to_edge_list(array, directed)),
        array_(std::move(array)),
        before_(snapshot(array_)),
        start_(start) {}

  TrialResult run() {
    check_dfs("dfs", DfsOptions{BandMode::banded, start_, false});
    check_dfs("dfs all", DfsOptions{BandMode::banded, std::nullopt, false});
    check_dfs("dfs explore", DfsOptions{BandMode::banded, start_, true});
    bool strict_ok = true;
    try {
      check_strict_domain(array_);
    } catch (const RepresentationError&) {
      strict_ok = false;
    }
    if (strict_ok) check_dfs("dfs strict", DfsOptions{BandMode::strict, start_, false});

    if (result_.failure == TrialFailure::none) {
      const auto got = bfs_run(array_, start_);
      if (!damaged("bfs") && got != oracle_bfs(edges_, start_)) fail_oracle("bfs");
    }
    if (result_.failure == TrialFailure::none) {
      const auto got = bfs_all_components(array_);
      if (!damaged("bfs all") && got != oracle_bfs_all(edges_)) fail_oracle("bfs all");
    }
    if (result_.failure == TrialFailure::none) {
      Representation rep(array_);
      to_begin_pointer(rep);
      swap_representation(rep);
      restore_sorted_standard(rep);
      damaged("transform round trip");
    }
    return result_;
  }

 private:
  void check_dfs(const char* what, const DfsOptions& options) {
    if (result_.failure != TrialFailure::none) return;
    const DfsEventStream got = dfs_run(array_, options);
    if (damaged(what)) return;
    if (got != oracle_dfs(edges_, options.start, options.explore)) fail_oracle(what);
  }

  // Returns true (and records the failure) when the array was not restored.
  bool damaged(const char* what) {
    if (snapshot(array_) == before_) return false;
    result_ = {TrialFailure::restore, std::string(what) + ": array not restored"};
    return true;
  }

  void fail_oracle(const char* what) {
    result_ = {TrialFailure::oracle, std::string(what) + ": differs from the oracle"};
  }

  EdgeList edges_;
  WordArray array_;
  Digest before_;
  Vertex start_ = 1;
  TrialResult result_;
};

}  // namespace

TrialResult run_trial(const WordArray& a, bool directed, Vertex start) {
  try {
    return Trial(a, directed, start).run();
  } catch (const Error& e) {
    return {TrialFailure::corruption, e.what()};
  }
}

TrialResult run_trial(const CorpusCase& c) {
  const EdgeList e = realize(c);
  return run_trial(build(e), e.directed, 1 + c.seed % e.n);
}

}  // namespace ipg::cli
