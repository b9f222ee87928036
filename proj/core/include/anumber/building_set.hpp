#pragma once

#include <optional>
#include <span>
#include <vector>

#include "anumber/complex.hpp"
#include "anumber/graph.hpp"

namespace anumber {

/// A building set on {0..host_size-1}: contains every singleton and the
/// union of any two intersecting members. Elements are kept in
/// CanonicalOrder so element indices are deterministic.
class BuildingSet {
 public:
  /// Throws DomainError unless `elements` form a building set.
  BuildingSet(int host_size, std::vector<VertexSubset> elements);

  int host_size() const { return host_size_; }
  const std::vector<VertexSubset>& elements() const { return elements_; }
  /// Whether the full host set is an element.
  bool connected() const { return connected_; }
  bool contains(VertexSubset subset) const;
  /// Every element except the full host set, in CanonicalOrder.
  std::vector<VertexSubset> proper_elements() const;

  /// Set when built by graphical_building_set; enables the flag-complex path.
  const std::optional<SimpleGraph>& graph() const { return graph_; }

 private:
  friend BuildingSet graphical_building_set(const SimpleGraph& graph);
  BuildingSet() = default;

  int host_size_ = 0;
  std::vector<VertexSubset> elements_;
  bool connected_ = false;
  std::optional<SimpleGraph> graph_;
};

/// B(G): vertex sets of the connected induced subgraphs of G.
BuildingSet graphical_building_set(const SimpleGraph& graph);

bool is_building_set(int host_size, std::span<const VertexSubset> elements);

/// (N1) members pairwise nested or disjoint; (N2) no union of two or more
/// pairwise disjoint members lies in B. Requires a connected B; DomainError
/// if a member is not a proper element of B.
bool is_nested_set(const BuildingSet& building_set, std::span<const VertexSubset> members);

enum class Meet { inclusion, separation, none };

/// How the facets F_I and F_J of the nestohedron meet.
Meet pairwise_meet(const BuildingSet& building_set, VertexSubset first, VertexSubset second);

struct ComplexOptions {
  /// Largest host set for which nested set complexes are built.
  int max_host_size = 7;
};

/// The nested set complex: vertices are the proper elements, faces the
/// nested sets. Graphical building sets use maximal cliques of the pairwise
/// meet graph; others enumerate nested sets directly.
SimplicialComplex nested_set_complex(const BuildingSet& building_set, ComplexOptions options = {});

/// Direct (N1)/(N2) enumeration of all nested sets, never assuming flagness.
SimplicialComplex nested_set_complex_direct(const BuildingSet& building_set,
                                            ComplexOptions options = {});

/// Induced subcomplexes of the nested set complex of B(G). All require G
/// connected and throw DomainError otherwise.
///
/// K_G^even / K_G^odd: elements of even / odd cardinality; G of even order.
SimplicialComplex k_even(const SimpleGraph& graph, ComplexOptions options = {});
SimplicialComplex k_odd(const SimpleGraph& graph, ComplexOptions options = {});
/// K'_T: elements I with |T ∩ I| odd.
SimplicialComplex kp_T(const SimpleGraph& graph, VertexSubset t, ComplexOptions options = {});
/// K''_T: elements I ⊆ T with |I| odd; |T| must be even.
SimplicialComplex kpp_T(const SimpleGraph& graph, VertexSubset t, ComplexOptions options = {});

/// Proper nonempty subsets I of V(G) such that every component of G|_I has
/// even order, ordered by inclusion and listed in CanonicalOrder.
struct EvenPoset {
  std::vector<VertexSubset> elements;

  /// Pairs (i, j) with elements[i] covered by elements[j].
  std::vector<std::pair<int, int>> cover_relations() const;
};

/// Requires G connected of even order.
EvenPoset even_poset(const SimpleGraph& graph);

/// Faces are the chains of the poset.
SimplicialComplex order_complex(const EvenPoset& poset);

}  // namespace anumber
