#include "ipg/graph_io.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace ipg {

namespace {

constexpr std::uint8_t kMagic[4] = {'I', 'P', 'G', '1'};

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
  for (unsigned b = 0; b < bytes; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, unsigned bytes) {
  std::uint64_t v = 0;
  for (unsigned b = 0; b < bytes; ++b) v |= std::uint64_t{in[at + b]} << (8 * b);
  return v;
}

}  // namespace

std::vector<std::uint8_t> store_graph(const WordArray& a, bool directed) {
  const unsigned word_bytes = (a.width() + 7) / 8;
  std::vector<std::uint8_t> out;
  out.reserve(kFileHeaderBytes + a.size() * word_bytes);
  for (std::uint8_t b : kMagic) out.push_back(b);
  out.push_back(kFormatVersion);
  out.push_back(static_cast<std::uint8_t>(a.width()));
  out.push_back(directed ? 1 : 0);
  out.push_back(0);
  put_le(out, a.size(), 8);
  for (Word w : a.words()) put_le(out, w, word_bytes);
  return out;
}

StoredGraph load_graph(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFileHeaderBytes) {
    throw FormatError("truncated header: " + std::to_string(bytes.size()) +
                          " of 16 bytes",
                      bytes.size());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (bytes[i] != kMagic[i]) throw FormatError("bad magic, expected IPG1", i);
  }
  if (bytes[4] != kFormatVersion) {
    throw FormatError("unsupported version " + std::to_string(bytes[4]), 4);
  }
  const unsigned width = bytes[5];
  if (width < kMinWidth || width > kMaxWidth) {
    throw FormatError("width " + std::to_string(width) + " outside [8, 64]", 5);
  }
  const std::uint8_t flags = bytes[6];
  if ((flags & ~std::uint8_t{1}) != 0) {
    throw FormatError("unknown flag bits " + std::to_string(flags), 6);
  }
  const std::uint64_t count = get_le(bytes, 8, 8);
  const unsigned word_bytes = (width + 7) / 8;
  const std::uint64_t body = bytes.size() - kFileHeaderBytes;
  if (count > body / word_bytes || count * word_bytes != body) {
    const std::size_t where =
        count > body / word_bytes ? bytes.size() : kFileHeaderBytes + count * word_bytes;
    throw FormatError(count > body / word_bytes
                          ? "truncated body: " + std::to_string(count) +
                                " words declared"
                          : "trailing bytes after " + std::to_string(count) + " words",
                      where);
  }
  const Word mask = width == 64 ? ~Word{0} : (Word{1} << width) - 1;
  std::vector<Word> words(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = kFileHeaderBytes + i * word_bytes;
    words[i] = get_le(bytes, at, word_bytes);
    if (words[i] > mask) {
      throw FormatError("word " + std::to_string(i) + " exceeds width " +
                            std::to_string(width),
                        at);
    }
  }
  return StoredGraph{WordArray(width, std::move(words)), (flags & 1) != 0};
}

void write_graph_file(const std::string& path, const WordArray& a, bool directed) {
  const std::vector<std::uint8_t> bytes = store_graph(a, directed);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ParameterError("cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()),
           static_cast<std::streamsize>(bytes.size()));
  if (!os) throw ParameterError("write to " + path + " failed");
}

StoredGraph read_graph_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParameterError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                  std::istreambuf_iterator<char>());
  return load_graph(bytes);
}

void write_edge_list_text(std::ostream& os, const EdgeList& e) {
  os << e.n << ' ' << e.edges.size() << ' ' << (e.directed ? 1 : 0) << '\n';
  for (const Edge& ed : e.edges) os << ed.u << ' ' << ed.v << '\n';
}

EdgeList read_edge_list_text(std::istream& is) {
  EdgeList e;
  std::size_t m = 0;
  int directed = 0;
  std::string line;
  if (!std::getline(is, line)) throw ParameterError("empty edge list");
  std::istringstream head(line);
  if (!(head >> e.n >> m >> directed) || (directed != 0 && directed != 1)) {
    throw ParameterError("edge list header must be 'n m directed(0|1)'");
  }
  e.directed = directed == 1;
  e.edges.reserve(m);
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    Edge ed;
    if (!(row >> ed.u >> ed.v)) {
      throw ParameterError("line " + std::to_string(lineno) + ": expected 'u v'");
    }
    e.edges.push_back(ed);
  }
  if (e.edges.size() != m) {
    throw ParameterError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(e.edges.size()));
  }
  return e;
}

}  // namespace ipg
