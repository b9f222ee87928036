#include "anumber/building_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "anumber/error.hpp"

namespace anumber {

namespace {

constexpr int kMaxEnumeratedHost = 24;

void check_enumerable(int n, const char* what) {
  if (n > kMaxEnumeratedHost) {
    throw ResourceLimit(std::string(what) + " enumerates all 2^" + std::to_string(n) +
                        " vertex subsets; limit is " + std::to_string(kMaxEnumeratedHost) +
                        " vertices");
  }
}

void check_host_cap(int host_size, const ComplexOptions& options) {
  if (host_size > options.max_host_size) {
    throw ResourceLimit("nested set complex on " + std::to_string(host_size) +
                        " points exceeds the cap of " + std::to_string(options.max_host_size));
  }
}

// Fixed-length bit set sized at run time; the pairwise meet graph of B(K_7)
// has 126 vertices.
class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& other) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
    return out;
  }
  Bits operator|(const Bits& other) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] |= other.words_[k];
    return out;
  }
  Bits minus(const Bits& other) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~other.words_[k];
    return out;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (auto w = words_[k]; w; w &= w - 1) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

void bron_kerbosch(const std::vector<Bits>& adjacency, Face& clique, Bits candidates,
                   Bits excluded, std::vector<Face>& out) {
  if (!candidates.any() && !excluded.any()) {
    out.push_back(clique);
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with most neighbours in P.
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  (candidates | excluded).for_each([&](std::size_t u) {
    auto c = (candidates & adjacency[u]).count();
    if (!have_pivot || c > best) {
      pivot = u;
      best = c;
      have_pivot = true;
    }
  });
  std::vector<std::size_t> branch;
  candidates.minus(adjacency[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });
  for (auto v : branch) {
    clique.push_back(static_cast<int>(v));
    bron_kerbosch(adjacency, clique, candidates & adjacency[v], excluded & adjacency[v], out);
    clique.pop_back();
    candidates.reset(v);
    excluded.set(v);
  }
}

// False if `accumulated` united with some nonempty pairwise-disjoint
// subfamily of pool[start..] lies in B.
bool unions_avoid_building_set(const BuildingSet& b, std::span<const VertexSubset> pool,
                               std::size_t start, VertexSubset accumulated) {
  for (std::size_t k = start; k < pool.size(); ++k) {
    if (pool[k].intersects(accumulated)) continue;
    auto grown = accumulated | pool[k];
    if (b.contains(grown)) return false;
    if (!unions_avoid_building_set(b, pool, k + 1, grown)) return false;
  }
  return true;
}

bool can_extend(const BuildingSet& b, std::span<const VertexSubset> current, VertexSubset next) {
  std::vector<VertexSubset> disjoint;
  for (auto member : current) {
    if (member.is_subset_of(next) || next.is_subset_of(member)) continue;
    if (member.intersects(next)) return false;
    disjoint.push_back(member);
  }
  // Families containing `next` plus at least one disjoint member; the
  // disjoint members among themselves were checked when they were added.
  return unions_avoid_building_set(b, disjoint, 0, next);
}

void enumerate_nested(const BuildingSet& b, const std::vector<VertexSubset>& proper,
                      std::size_t start, std::vector<VertexSubset>& current, Face& indices,
                      std::vector<Face>& out) {
  for (std::size_t k = start; k < proper.size(); ++k) {
    if (!can_extend(b, current, proper[k])) continue;
    current.push_back(proper[k]);
    indices.push_back(static_cast<int>(k));
    out.push_back(indices);
    enumerate_nested(b, proper, k + 1, current, indices, out);
    indices.pop_back();
    current.pop_back();
  }
}

void require_connected_graph(const SimpleGraph& graph, const char* what) {
  if (graph.order() > 0 && !is_connected(graph)) {
    throw DomainError(std::string(what) + " requires a connected graph");
  }
}

SimplicialComplex graph_complex(const SimpleGraph& graph, const ComplexOptions& options) {
  require_connected_graph(graph, "nested set complex of B(G)");
  return nested_set_complex(graphical_building_set(graph), options);
}

void require_even_order(const SimpleGraph& graph, const char* what) {
  if (graph.order() % 2 != 0) {
    throw DomainError(std::string(what) + " requires a graph of even order, got " +
                      std::to_string(graph.order()) + " vertices");
  }
}

}  // namespace

BuildingSet::BuildingSet(int host_size, std::vector<VertexSubset> elements)
    : host_size_(host_size) {
  if (host_size < 0 || host_size > VertexSubset::kMaxVertices) {
    throw UnsupportedInstance("host size must lie in 0..63");
  }
  std::sort(elements.begin(), elements.end(), CanonicalOrder{});
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_building_set(host_size, elements)) {
    throw DomainError("elements do not form a building set on " + std::to_string(host_size) +
                      " points");
  }
  elements_ = std::move(elements);
  connected_ = host_size > 0 && contains(VertexSubset::full(host_size));
}

bool BuildingSet::contains(VertexSubset subset) const {
  return std::binary_search(elements_.begin(), elements_.end(), subset, CanonicalOrder{});
}

std::vector<VertexSubset> BuildingSet::proper_elements() const {
  std::vector<VertexSubset> out;
  const auto full = VertexSubset::full(host_size_);
  for (auto e : elements_) {
    if (e != full) out.push_back(e);
  }
  return out;
}

BuildingSet graphical_building_set(const SimpleGraph& graph) {
  const int n = graph.order();
  check_enumerable(n, "graphical_building_set");
  BuildingSet out;
  out.host_size_ = n;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    auto subset = VertexSubset::from_bits(bits);
    if (is_connected(graph, subset)) out.elements_.push_back(subset);
  }
  std::sort(out.elements_.begin(), out.elements_.end(), CanonicalOrder{});
  out.connected_ = n > 0 && is_connected(graph);
  out.graph_ = graph;
  return out;
}

bool is_building_set(int host_size, std::span<const VertexSubset> elements) {
  if (host_size < 0 || host_size > VertexSubset::kMaxVertices) return false;
  const auto host = VertexSubset::full(host_size);
  std::unordered_set<VertexSubset> members(elements.begin(), elements.end());
  for (auto e : elements) {
    if (e.empty() || !e.is_subset_of(host)) return false;
  }
  for (int v = 0; v < host_size; ++v) {
    if (!members.contains(VertexSubset::singleton(v))) return false;
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i].intersects(elements[j]) && !members.contains(elements[i] | elements[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_nested_set(const BuildingSet& building_set, std::span<const VertexSubset> members) {
  if (!building_set.connected()) throw DomainError("nested sets need a connected building set");
  const auto full = VertexSubset::full(building_set.host_size());
  std::vector<VertexSubset> distinct(members.begin(), members.end());
  std::sort(distinct.begin(), distinct.end(), CanonicalOrder{});
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto m : distinct) {
    if (m == full || !building_set.contains(m)) {
      throw DomainError(m.to_string() + " is not a proper element of the building set");
    }
  }
  std::vector<VertexSubset> current;
  for (auto m : distinct) {
    if (!can_extend(building_set, current, m)) return false;
    current.push_back(m);
  }
  return true;
}

Meet pairwise_meet(const BuildingSet& building_set, VertexSubset first, VertexSubset second) {
  if (first.is_subset_of(second) || second.is_subset_of(first)) return Meet::inclusion;
  const auto& graph = building_set.graph();
  const bool separated = graph ? !is_connected(*graph, first | second)
                               : !first.intersects(second) && !building_set.contains(first | second);
  return separated ? Meet::separation : Meet::none;
}

SimplicialComplex nested_set_complex(const BuildingSet& building_set, ComplexOptions options) {
  if (!building_set.graph()) return nested_set_complex_direct(building_set, options);
  if (!building_set.connected()) {
    throw DomainError("nested set complex needs a connected building set");
  }
  check_host_cap(building_set.host_size(), options);

  const auto proper = building_set.proper_elements();
  const std::size_t m = proper.size();
  std::vector<Bits> adjacency(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (pairwise_meet(building_set, proper[i], proper[j]) != Meet::none) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  std::vector<Face> facets;
  if (m > 0) {
    Bits all(m);
    for (std::size_t i = 0; i < m; ++i) all.set(i);
    Face clique;
    bron_kerbosch(adjacency, clique, all, Bits(m), facets);
  }
  return SimplicialComplex(proper, std::move(facets));
}

SimplicialComplex nested_set_complex_direct(const BuildingSet& building_set,
                                            ComplexOptions options) {
  if (!building_set.connected()) {
    throw DomainError("nested set complex needs a connected building set");
  }
  check_host_cap(building_set.host_size(), options);
  const auto proper = building_set.proper_elements();
  std::vector<Face> faces;
  std::vector<VertexSubset> current;
  Face indices;
  enumerate_nested(building_set, proper, 0, current, indices, faces);
  return SimplicialComplex(proper, std::move(faces));
}

SimplicialComplex k_even(const SimpleGraph& graph, ComplexOptions options) {
  require_even_order(graph, "K_G^even");
  return induced_subcomplex(graph_complex(graph, options),
                            [](VertexSubset i) { return i.size() % 2 == 0; });
}

SimplicialComplex k_odd(const SimpleGraph& graph, ComplexOptions options) {
  require_even_order(graph, "K_G^odd");
  return induced_subcomplex(graph_complex(graph, options),
                            [](VertexSubset i) { return i.size() % 2 != 0; });
}

SimplicialComplex kp_T(const SimpleGraph& graph, VertexSubset t, ComplexOptions options) {
  if (!t.is_subset_of(graph.vertices())) throw DomainError("T must be a subset of V(G)");
  return induced_subcomplex(graph_complex(graph, options),
                            [t](VertexSubset i) { return (i & t).size() % 2 != 0; });
}

SimplicialComplex kpp_T(const SimpleGraph& graph, VertexSubset t, ComplexOptions options) {
  if (!t.is_subset_of(graph.vertices())) throw DomainError("T must be a subset of V(G)");
  if (t.size() % 2 != 0) throw DomainError("K''_T needs |T| even, got " + t.to_string());
  return induced_subcomplex(graph_complex(graph, options), [t](VertexSubset i) {
    return i.is_subset_of(t) && i.size() % 2 != 0;
  });
}

std::vector<std::pair<int, int>> EvenPoset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  const int m = static_cast<int>(elements.size());
  auto below = [&](int i, int j) {
    return elements[i] != elements[j] && elements[i].is_subset_of(elements[j]);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!below(i, j)) continue;
      bool covered = true;
      for (int k = 0; k < m && covered; ++k) {
        if (below(i, k) && below(k, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

EvenPoset even_poset(const SimpleGraph& graph) {
  require_even_order(graph, "S_G");
  const int n = graph.order();
  check_enumerable(n, "even_poset");
  EvenPoset poset;
  const std::uint64_t full = n == 0 ? 0 : VertexSubset::full(n).bits();
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    auto subset = VertexSubset::from_bits(bits);
    if (subset.size() % 2 != 0) continue;
    auto parts = components_within(graph, subset);
    if (std::all_of(parts.begin(), parts.end(), [](auto p) { return p.size() % 2 == 0; })) {
      poset.elements.push_back(subset);
    }
  }
  std::sort(poset.elements.begin(), poset.elements.end(), CanonicalOrder{});
  return poset;
}

SimplicialComplex order_complex(const EvenPoset& poset) {
  const int m = static_cast<int>(poset.elements.size());
  std::vector<std::vector<int>> up(static_cast<std::size_t>(m));
  std::vector<char> has_lower(static_cast<std::size_t>(m), 0);
  for (auto [i, j] : poset.cover_relations()) {
    up[i].push_back(j);
    has_lower[j] = 1;
  }
  // Maximal chains are the saturated chains from a minimal to a maximal
  // element.
  std::vector<Face> chains;
  Face chain;
  auto walk = [&](auto&& self, int v) -> void {
    chain.push_back(v);
    if (up[v].empty()) chains.push_back(chain);
    for (int w : up[v]) self(self, w);
    chain.pop_back();
  };
  for (int v = 0; v < m; ++v) {
    if (!has_lower[v]) walk(walk, v);
  }
  return SimplicialComplex(poset.elements, std::move(chains));
}

}  // namespace anumber
