#include "anumber/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>

#include "anumber/error.hpp"

namespace anumber {

namespace {

// Upper-triangle adjacency code; bit index of pair (i, j), i < j, follows
// the column-major order of graph6.
std::uint32_t code_under(const SimpleGraph& graph, const std::array<int, kMaxCorpusOrder>& perm) {
  const int n = graph.order();
  std::uint32_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | (graph.has_edge(perm[i], perm[j]) ? 1U : 0U);
    }
  }
  return code;
}

std::uint32_t canonical_code(const SimpleGraph& graph) {
  std::array<int, kMaxCorpusOrder> perm{};
  const int n = graph.order();
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint32_t best = 0;
  do {
    best = std::max(best, code_under(graph, perm));
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

SimpleGraph from_code(int n, std::uint32_t code) {
  std::vector<SimpleGraph::Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, edges);
}

}  // namespace

std::vector<SimpleGraph> all_graphs(int n) {
  if (n < 0 || n > kMaxCorpusOrder) {
    throw ResourceLimit("graph corpus enumeration supports 0..7 vertices, got " +
                        std::to_string(n));
  }
  if (n <= 1) return {SimpleGraph(n)};

  // Extend every class on n-1 vertices by a new vertex with each possible
  // neighbourhood; every graph on n vertices arises this way.
  std::set<std::uint32_t> codes;
  for (const auto& smaller : all_graphs(n - 1)) {
    const auto base = smaller.edges();
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      auto edges = base;
      for (int v = 0; v < n - 1; ++v) {
        if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
      }
      codes.insert(canonical_code(SimpleGraph(n, edges)));
    }
  }
  std::vector<SimpleGraph> out;
  out.reserve(codes.size());
  for (auto code : codes) out.push_back(from_code(n, code));
  std::sort(out.begin(), out.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
    return encode_graph6(a) < encode_graph6(b);
  });
  return out;
}

std::vector<SimpleGraph> connected_graphs(int n) {
  std::vector<SimpleGraph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> connected_graphs_up_to(int max_order) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_order; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace anumber
