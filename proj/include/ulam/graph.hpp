#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ulam/errors.hpp"

namespace ulam {

// Simple undirected graph, vertices 1..n. Edges stored as given (order matters for
// reduction output layout); endpoints are normalized i<j on construction.
struct Graph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Normalizes endpoint order and rejects loops, duplicate edges, and out-of-range vertices.
Graph make_graph(std::uint32_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

// Value of the cut induced by `mask` (bit v-1 set means vertex v on side A).
std::uint64_t cut_value(const Graph& g, std::uint64_t mask);

}  // namespace ulam
