#include "ulam/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ulam {

Graph make_graph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == 0 || e.second > n)
      fail(Errc::parse_error, "edge endpoint outside 1.." + std::to_string(n));
    if (e.first == e.second) fail(Errc::parse_error, "self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(e).second)
      fail(Errc::parse_error, "duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
  }
  return Graph{n, std::move(edges)};
}

std::uint64_t cut_value(const Graph& g, std::uint64_t mask) {
  std::uint64_t c = 0;
  for (auto [u, v] : g.edges) {
    bool su = (mask >> (u - 1)) & 1, sv = (mask >> (v - 1)) & 1;
    if (su != sv) ++c;
  }
  return c;
}

}  // namespace ulam
