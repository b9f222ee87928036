#pragma once

#include <vector>

#include "anumber/graph.hpp"

namespace anumber {

/// Largest order accepted by the corpus generators below.
inline constexpr int kMaxCorpusOrder = 7;

/// One representative per isomorphism class of graphs on exactly n
/// vertices, each in its canonical labelling, sorted by graph6 code.
/// Brute-force canonical forms; n <= 7.
std::vector<SimpleGraph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<SimpleGraph> connected_graphs(int n);

/// connected_graphs(1) + ... + connected_graphs(max_order).
std::vector<SimpleGraph> connected_graphs_up_to(int max_order);

}  // namespace anumber
