#include "ipg/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ipg {

unsigned min_width(std::size_t n, std::size_t total_length) {
  // Largest value ever written is 3n + 2L + 3 (done-marked degree-zero ref).
  const std::uint64_t top = 3 * std::uint64_t{n} + 2 * std::uint64_t{total_length} + 3;
  const unsigned bits = static_cast<unsigned>(std::bit_width(top));
  return std::clamp(bits, kMinWidth, kMaxWidth);
}

GraphHeader read_header(const WordArray& a, bool directed) {
  if (a.size() < 2) throw ValidationError("array too short for a graph header");
  GraphHeader h;
  h.n = static_cast<std::size_t>(a.read(0));
  if (h.n == 0) throw ValidationError("graph must have at least one vertex");
  if (h.n + 1 >= a.size()) {
    throw ValidationError("vertex count " + std::to_string(h.n) +
                          " does not fit array of " + std::to_string(a.size()) +
                          " words");
  }
  h.total_length = static_cast<std::size_t>(a.read(h.n + 1));
  if (h.array_size() != a.size()) {
    throw ValidationError("array length " + std::to_string(a.size()) +
                          " differs from n + L + 2 = " +
                          std::to_string(h.array_size()));
  }
  h.directed = directed;
  if (!directed && h.total_length % 2 != 0) {
    throw ValidationError("undirected graph with odd adjacency length");
  }
  h.m = directed ? h.total_length : h.total_length / 2;
  h.width = a.width();
  return h;
}

namespace {

void check_edges(const EdgeList& e) {
  if (e.n == 0) throw ValidationError("graph must have at least one vertex");
  std::vector<Edge> seen;
  seen.reserve(e.edges.size());
  for (const Edge& ed : e.edges) {
    if (ed.u < 1 || ed.u > e.n || ed.v < 1 || ed.v > e.n) {
      throw ValidationError("edge (" + std::to_string(ed.u) + "," +
                            std::to_string(ed.v) + ") has an endpoint outside [1, " +
                            std::to_string(e.n) + "]");
    }
    if (ed.u == ed.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(ed.u));
    }
    Edge key = ed;
    if (!e.directed && key.u > key.v) std::swap(key.u, key.v);
    seen.push_back(key);
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    throw ValidationError("duplicate edge (" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + ")");
  }
}

}  // namespace

WordArray build(const EdgeList& e, unsigned width) {
  check_edges(e);
  const std::size_t n = e.n;
  const std::size_t total = e.directed ? e.edges.size() : 2 * e.edges.size();
  const unsigned needed = min_width(n, total);
  if (width < needed) {
    throw ValidationError("width " + std::to_string(width) +
                          " below required " + std::to_string(needed) +
                          " bits for n=" + std::to_string(n) +
                          ", L=" + std::to_string(total));
  }

  std::vector<std::size_t> deg(n + 2, 0);
  for (const Edge& ed : e.edges) {
    ++deg[ed.u];
    if (!e.directed) ++deg[ed.v];
  }
  std::vector<Word> words(n + total + 2, 0);
  words[0] = n;
  words[n + 1] = total;
  std::vector<std::size_t> fill(n + 2, 0);
  std::size_t next = n + 2;
  for (std::size_t v = 1; v <= n; ++v) {
    words[v] = next;
    fill[v] = next;
    next += deg[v];
  }
  for (const Edge& ed : e.edges) {
    words[fill[ed.u]++] = ed.v;
    if (!e.directed) words[fill[ed.v]++] = ed.u;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    auto first = words.begin() + static_cast<std::ptrdiff_t>(words[v]);
    std::sort(first, first + static_cast<std::ptrdiff_t>(deg[v]));
  }
  return WordArray(width, std::move(words));
}

WordArray build(const EdgeList& e) {
  const std::size_t total = e.directed ? e.edges.size() : 2 * e.edges.size();
  return build(e, min_width(e.n, total));
}

std::size_t degree(const WordArray& a, Vertex v) {
  const Word n = a.read(0);
  if (v < 1 || v > n) {
    throw BoundsError("vertex " + std::to_string(v) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  const Word begin = a.read(v);
  const Word end = v < n ? a.read(v + 1) : n + a.read(n + 1) + 2;
  return static_cast<std::size_t>(end - begin);
}

std::string ValidationReport::to_string() const {
  if (ok()) return "pass";
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << "index " << v.index << ": " << v.message << '\n';
  }
  return os.str();
}

ValidationReport validate(const WordArray& a, bool directed) {
  ValidationReport report;
  auto fail = [&](std::size_t index, std::string msg) {
    report.violations.push_back({index, std::move(msg)});
  };
  const std::size_t size = a.size();
  if (size < 3) {
    fail(0, "array shorter than 3 words");
    return report;
  }
  const Word n = a.peek(0);
  if (n == 0 || n + 1 >= size) {
    fail(0, "vertex count " + std::to_string(n) + " inconsistent with length " +
                std::to_string(size));
    return report;
  }
  const Word total = a.peek(n + 1);
  if (n + total + 2 != size) {
    fail(n + 1, "adjacency length " + std::to_string(total) +
                    " inconsistent with array length " + std::to_string(size));
    return report;
  }
  if (!directed && total % 2 != 0) {
    fail(n + 1, "undirected adjacency length must be even");
  }
  if (a.width() < min_width(n, total)) {
    fail(0, "width " + std::to_string(a.width()) + " below required " +
                std::to_string(min_width(n, total)));
  }

  const Word first = n + 2;
  const Word end = n + total + 2;
  bool table_ok = true;
  if (a.peek(1) != first) {
    fail(1, "T[1] must equal n+2 = " + std::to_string(first));
    table_ok = false;
  }
  for (Word v = 1; v <= n; ++v) {
    const Word t = a.peek(v);
    if (t < first || t > end) {
      fail(v, "pointer " + std::to_string(t) + " outside [" +
                  std::to_string(first) + ", " + std::to_string(end) + "]");
      table_ok = false;
    }
    if (v > 1 && t < a.peek(v - 1)) {
      fail(v, "non-monotone T: T[" + std::to_string(v) + "] < T[" +
                  std::to_string(v - 1) + "]");
      table_ok = false;
    }
  }
  if (!table_ok) return report;

  auto array_end = [&](Word v) { return v < n ? a.peek(v + 1) : end; };
  for (Word v = 1; v <= n; ++v) {
    const Word b = a.peek(v);
    const Word e = array_end(v);
    for (Word i = b; i < e; ++i) {
      const Word x = a.peek(i);
      if (x < 1 || x > n) {
        fail(i, "adjacency entry " + std::to_string(x) + " is not a vertex");
        continue;
      }
      if (x == v) fail(i, "self-loop at vertex " + std::to_string(v));
      if (i > b && x <= a.peek(i - 1)) {
        fail(i, "duplicate or non-strict ascent in adjacency of vertex " +
                    std::to_string(v));
      }
    }
  }
  if (!directed && report.ok()) {
    for (Word v = 1; v <= n; ++v) {
      for (Word i = a.peek(v); i < array_end(v); ++i) {
        const Word x = a.peek(i);
        const auto lo = a.words().begin() + static_cast<std::ptrdiff_t>(a.peek(x));
        const auto hi = a.words().begin() + static_cast<std::ptrdiff_t>(array_end(x));
        if (!std::binary_search(lo, hi, v)) {
          fail(i, "edge {" + std::to_string(v) + "," + std::to_string(x) +
                      "} missing from the adjacency of " + std::to_string(x));
        }
      }
    }
  }
  return report;
}

EdgeList to_edge_list(const WordArray& a, bool directed) {
  EdgeList e;
  const Word n = a.peek(0);
  const Word end = n + a.peek(n + 1) + 2;
  e.n = static_cast<std::size_t>(n);
  e.directed = directed;
  for (Word v = 1; v <= n; ++v) {
    const Word stop = v < n ? a.peek(v + 1) : end;
    for (Word i = a.peek(v); i < stop; ++i) {
      const Word x = a.peek(i);
      if (directed || v < x) e.edges.push_back({v, x});
    }
  }
  return e;
}

}  // namespace ipg
