#include "ipg/bfs.hpp"

namespace ipg {

std::vector<BfsRecord> bfs_run(WordArray& a, Vertex start, RegisterFile& regs) {
  std::vector<BfsRecord> out;
  bfs_run(
      a, start, [&](Vertex v, Word d, Vertex root) { out.push_back({v, d, root}); }, regs);
  return out;
}

std::vector<BfsRecord> bfs_run(WordArray& a, Vertex start) {
  RegisterFile regs;
  return bfs_run(a, start, regs);
}

std::vector<BfsRecord> bfs_all_components(WordArray& a, RegisterFile& regs) {
  std::vector<BfsRecord> out;
  bfs_all_components(
      a, [&](Vertex v, Word d, Vertex root) { out.push_back({v, d, root}); }, regs);
  return out;
}

std::vector<BfsRecord> bfs_all_components(WordArray& a) {
  RegisterFile regs;
  return bfs_all_components(a, regs);
}

}  // namespace ipg
