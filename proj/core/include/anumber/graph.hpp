#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anumber/vertex_subset.hpp"

namespace anumber {

/// Finite undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as one VertexSubset per vertex. Instances are
/// immutable once constructed.
class SimpleGraph {
 public:
  using Edge = std::pair<int, int>;

  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  /// Duplicate edges collapse. Throws MalformedInput on loops or
  /// out-of-range endpoints.
  SimpleGraph(int order, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  VertexSubset vertices() const { return VertexSubset::full(order()); }
  VertexSubset neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<VertexSubset> adjacency_;
};

enum class GraphFamily { path, cycle, complete, star };

std::string_view family_name(GraphFamily family);
/// Accepts "path", "cycle", "complete", "star". Throws MalformedInput.
GraphFamily parse_family(std::string_view name);

/// Members of the four named families on n vertices. star(n) is K_{1,n-1}
/// centred at vertex 0. Throws UnsupportedInstance for cycle(1), cycle(2).
SimpleGraph generate(GraphFamily family, int n);
/// "path:6" style generator spec.
SimpleGraph generate_from_spec(std::string_view spec);

/// Lines: "n" then "u v" pairs; '#' starts a comment.
SimpleGraph parse_edge_list(std::string_view text);
std::string encode_edge_list(const SimpleGraph& graph);

SimpleGraph parse_graph6(std::string_view text);
std::string encode_graph6(const SimpleGraph& graph);

/// Vertices of the result are the members of `subset` relabelled 0..|I|-1
/// in ascending order.
SimpleGraph induced_subgraph(const SimpleGraph& graph, VertexSubset subset);

/// Vertex sets of the connected components of graph|_subset, sorted by
/// minimum element.
std::vector<VertexSubset> components_within(const SimpleGraph& graph, VertexSubset subset);

/// True iff graph|_subset is nonempty and connected.
bool is_connected(const SimpleGraph& graph, VertexSubset subset);
bool is_connected(const SimpleGraph& graph);

/// Vertices of `second` are shifted by first.order().
SimpleGraph disjoint_union(const SimpleGraph& first, const SimpleGraph& second);

}  // namespace anumber
