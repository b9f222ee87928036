#pragma once

#include "anumber/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Matrix to_matrix(const anumber::SimpleGraph& g) {
  return oracle::adjacency(g.order(), g.edges());
}

inline std::uint64_t mask_of(std::initializer_list<int> verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace testing_support
