#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipg/bfs.hpp"
#include "ipg/corpus.hpp"
#include "ipg/dfs.hpp"
#include "ipg/graph.hpp"
#include "ipg/graph_io.hpp"
#include "ipg/oracle.hpp"
#include "verify.hpp"

namespace ipg::cli {

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Writes to a file when a path is given, else to the fallback stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ParameterError("cannot open " + path + " for writing");
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

StoredGraph load_checked(const std::string& path) {
  StoredGraph g = read_graph_file(path);
  const ValidationReport report = validate(g.array, g.directed);
  if (!report.ok()) throw ValidationError(path + " is not a valid graph:\n" + report.to_string());
  return g;
}

bool is_binary_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParameterError("cannot open " + path);
  char magic[4] = {};
  is.read(magic, 4);
  return is.gcount() == 4 && std::string(magic, 4) == "IPG1";
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string model = "gnm";
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
  int directed = 1;
  unsigned width = 0;
  std::string out;
};

int gen(const GenArgs& a, Streams s) {
  const auto model = parse_model(a.model);
  if (!model) throw ParameterError("unknown model '" + a.model + "'");
  const EdgeList e = generate(*model, a.n, a.m, a.seed, a.directed != 0);
  const WordArray arr = a.width == 0 ? build(e) : build(e, a.width);
  write_graph_file(a.out, arr, e.directed);
  s.err << "wrote " << a.out << ": n=" << e.n << " m=" << e.edges.size()
        << " width=" << arr.width() << '\n';
  return kOk;
}

// --- convert ---------------------------------------------------------------

struct ConvertArgs {
  std::string in;
  std::string out;
  unsigned width = 0;
};

int convert(const ConvertArgs& a, Streams s) {
  if (is_binary_file(a.in)) {
    const StoredGraph g = load_checked(a.in);
    Output out(a.out, s.out);
    write_edge_list_text(*out, to_edge_list(g.array, g.directed));
    return kOk;
  }
  std::ifstream is(a.in);
  const EdgeList e = read_edge_list_text(is);
  const WordArray arr = a.width == 0 ? build(e) : build(e, a.width);
  if (a.out.empty()) throw ParameterError("--out is required when writing a binary graph");
  write_graph_file(a.out, arr, e.directed);
  return kOk;
}

// --- validate --------------------------------------------------------------

int validate_cmd(const std::string& in, Streams s) {
  const StoredGraph g = read_graph_file(in);
  const ValidationReport report = validate(g.array, g.directed);
  if (!report.ok()) {
    s.out << "invalid\n" << report.to_string();
    return kCorruption;
  }
  const GraphHeader h = read_header(g.array, g.directed);
  s.out << "valid n=" << h.n << " m=" << h.m << " L=" << h.total_length
        << " width=" << g.array.width() << " directed=" << (g.directed ? 1 : 0) << '\n';
  return kOk;
}

// --- dfs -------------------------------------------------------------------

struct DfsArgs {
  std::string in;
  std::optional<Vertex> start;
  std::string mode = "banded";
  bool explore = false;
  std::string events;
};

struct LineHooks {
  std::ostream* os;
  void preprocess(Vertex v) { *os << "pre " << v << '\n'; }
  void postprocess(Vertex v) { *os << "post " << v << '\n'; }
  void preexplore(Vertex u, Vertex v) { *os << "preexp " << u << ' ' << v << '\n'; }
  void postexplore(Vertex u, Vertex v) { *os << "postexp " << u << ' ' << v << '\n'; }
};

int restore_verdict(const WordArray& a, const Digest& before, Streams s) {
  if (snapshot(a) == before) return kOk;
  s.err << "error: input array was not restored\n";
  return kRestoreViolation;
}

int dfs(const DfsArgs& a, Streams s) {
  StoredGraph g = load_checked(a.in);
  DfsOptions options;
  options.start = a.start;
  options.explore = a.explore;
  options.mode = a.mode == "strict" ? BandMode::strict : BandMode::banded;
  if (options.mode == BandMode::strict) {
    try {
      check_strict_domain(g.array);
    } catch (const RepresentationError& e) {
      s.err << "warning: " << e.what() << "; use --mode banded for this graph\n";
      return kUsage;
    }
  }
  const Digest before = snapshot(g.array);
  Output out(a.events, s.out);
  LineHooks hooks{&*out};
  RegisterFile regs;
  dfs_run(g.array, options, hooks, regs);
  (*out).flush();
  return restore_verdict(g.array, before, s);
}

// --- bfs -------------------------------------------------------------------

int bfs(const std::string& in, std::optional<Vertex> start, Streams s) {
  StoredGraph g = load_checked(in);
  const Digest before = snapshot(g.array);
  RegisterFile regs;
  if (start) {
    bfs_run(g.array, *start,
            [&](Vertex v, Word d, Vertex) { s.out << v << ' ' << d << '\n'; }, regs);
  } else {
    bfs_all_components(
        g.array, [&](Vertex v, Word d, Vertex r) { s.out << v << ' ' << d << ' ' << r << '\n'; },
        regs);
  }
  s.out.flush();
  return restore_verdict(g.array, before, s);
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t max_n = 4096;
};

int verify(const VerifyArgs& a, Streams s) {
  std::size_t passed = 0;
  int code = kOk;
  std::optional<StoredGraph> g;
  if (!a.in.empty()) g = load_checked(a.in);
  for (std::size_t i = 0; i < a.trials; ++i) {
    TrialResult r;
    std::string replay;
    if (g) {
      // Trials on a fixed graph differ in their start vertex.
      const Vertex start = 1 + (a.seed + i) % g->array.peek(0);
      r = run_trial(g->array, g->directed, start);
      replay = a.in + ", start " + std::to_string(start);
    } else {
      const CorpusCase c = corpus_case(a.seed, i, a.max_n);
      r = run_trial(c);
      replay = "verify --seed " + std::to_string(a.seed) + ", case " + c.describe();
    }
    if (r.failure == TrialFailure::none) {
      ++passed;
      continue;
    }
    s.err << "FAIL trial " << i << " (replay: " << replay << "): " << r.detail << '\n';
    const int this_code = r.failure == TrialFailure::restore  ? kRestoreViolation
                          : r.failure == TrialFailure::oracle ? kOracleMismatch
                                                              : kCorruption;
    if (code == kOk) code = this_code;
  }
  s.out << passed << '/' << a.trials << " pass\n";
  return code;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string sizes = "1e4,1e5";
  std::string model = "gnm";
  double edge_factor = 4;
  std::uint64_t seed = 1;
  int directed = 1;
  std::string csv;
};

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 1 || v > 1e9) {
      throw ParameterError("bad size '" + item + "' in --sizes");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ParameterError("--sizes is empty");
  return out;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int bench(const BenchArgs& a, Streams s) {
  const auto model = parse_model(a.model);
  if (!model) throw ParameterError("unknown model '" + a.model + "'");
  Output out(a.csv, s.out);
  *out << "n,m,algo,seconds,reads,writes,peakRegisters\n";
  for (std::size_t n : parse_sizes(a.sizes)) {
    const std::size_t m = static_cast<std::size_t>(a.edge_factor * static_cast<double>(n));
    const EdgeList e = generate(*model, n, m, a.seed, a.directed != 0);
    WordArray arr = build(e);
    const Digest before = snapshot(arr);
    auto row = [&](const char* algo, double sec, const AccessStats* st) {
      *out << n << ',' << e.edges.size() << ',' << algo << ',' << sec << ',';
      if (st) {
        *out << st->reads << ',' << st->writes << ',' << st->peak_registers;
      } else {
        *out << ",,";
      }
      *out << '\n';
    };
    struct Counter {
      std::uint64_t k = 0;
      void preprocess(Vertex) { ++k; }
      void postprocess(Vertex) { ++k; }
    } counter;
    auto inplace = [&](const char* algo, auto&& fn) {
      arr.reset_stats();
      RegisterFile regs;
      const double sec = seconds([&] { fn(regs); });
      AccessStats st = arr.stats();
      st.peak_registers = regs.peak();
      if (!(snapshot(arr) == before)) throw CorruptionError(std::string(algo) + " did not restore", 0);
      row(algo, sec, &st);
    };
    inplace("dfs", [&](RegisterFile& regs) { dfs_run(arr, DfsOptions{}, counter, regs); });
    inplace("bfs", [&](RegisterFile& regs) {
      bfs_all_components(arr, [&](Vertex, Word, Vertex) { ++counter.k; }, regs);
    });
    row("oracle_dfs", seconds([&] { counter.k += oracle_dfs(e, std::nullopt).size(); }), nullptr);
    row("oracle_bfs", seconds([&] { counter.k += oracle_bfs_all(e).size(); }), nullptr);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Streams s{out, err};
  CLI::App app{"In-place DFS and BFS on succinct adjacency arrays", "ipg"};
  app.require_subcommand(1);

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph file");
  gen_cmd->add_option("--model", ga.model,
                      "gnm|path|cycle|star|binary-tree|deg1-chains|isolated-mix")
      ->capture_default_str();
  gen_cmd->add_option("--n", ga.n, "Number of vertices")->required();
  gen_cmd->add_option("--m", ga.m, "Edges (gnm, isolated-mix) or extra hub edges (deg1-chains)");
  gen_cmd->add_option("--seed", ga.seed)->capture_default_str();
  gen_cmd->add_option("--directed", ga.directed, "1 for directed, 0 for undirected")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  gen_cmd->add_option("--width", ga.width, "Word width (default: smallest that fits)")
      ->check(CLI::Range(8, 64));
  gen_cmd->add_option("--out", ga.out, "Output graph file")->required();

  ConvertArgs ca;
  auto* convert_cmd =
      app.add_subcommand("convert", "Text edge list to graph file, or graph file to text");
  convert_cmd->add_option("--in", ca.in)->required();
  convert_cmd->add_option("--out", ca.out, "Output path (text goes to stdout if omitted)");
  convert_cmd->add_option("--width", ca.width)->check(CLI::Range(8, 64));

  std::string validate_in;
  auto* validate_cmd_ = app.add_subcommand("validate", "Check a graph file");
  validate_cmd_->add_option("--in", validate_in)->required();

  DfsArgs da;
  auto* dfs_cmd = app.add_subcommand("dfs", "In-place DFS, printing pre/post events");
  dfs_cmd->add_option("--in", da.in)->required();
  dfs_cmd->add_option("--start", da.start, "Start vertex (default: every component)");
  dfs_cmd->add_option("--mode", da.mode)
      ->check(CLI::IsMember({"banded", "strict"}))
      ->capture_default_str();
  dfs_cmd->add_flag("--explore", da.explore, "Also emit preexp/postexp edge events");
  dfs_cmd->add_option("--events", da.events, "Event output file (default: stdout)");

  std::string bfs_in;
  std::optional<Vertex> bfs_start;
  auto* bfs_cmd = app.add_subcommand("bfs", "In-place BFS, printing 'v dist' lines");
  bfs_cmd->add_option("--in", bfs_in)->required();
  bfs_cmd->add_option("--start", bfs_start, "Start vertex (default: every component)");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized oracle and restore trials");
  verify_cmd->add_option("--in", va.in, "Graph file (default: random corpus)");
  verify_cmd->add_option("--trials", va.trials)->capture_default_str();
  verify_cmd->add_option("--seed", va.seed)->capture_default_str();
  verify_cmd->add_option("--max-n", va.max_n)->check(CLI::Range(1, 1 << 20))->capture_default_str();

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Timing and access counts as CSV");
  bench_cmd->add_option("--sizes", ba.sizes, "Comma-separated vertex counts, e.g. 1e4,1e5")
      ->capture_default_str();
  bench_cmd->add_option("--model", ba.model)->capture_default_str();
  bench_cmd->add_option("--edge-factor", ba.edge_factor, "m = factor * n")->capture_default_str();
  bench_cmd->add_option("--seed", ba.seed)->capture_default_str();
  bench_cmd->add_option("--directed", ba.directed)
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  bench_cmd->add_option("--csv", ba.csv, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return gen(ga, s);
    if (*convert_cmd) return convert(ca, s);
    if (*validate_cmd_) return validate_cmd(validate_in, s);
    if (*dfs_cmd) return dfs(da, s);
    if (*bfs_cmd) return bfs(bfs_in, bfs_start, s);
    if (*verify_cmd) return verify(va, s);
    if (*bench_cmd) return bench(ba, s);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundsError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCorruption;
  }
  return kUsage;
}

}  // namespace ipg::cli
