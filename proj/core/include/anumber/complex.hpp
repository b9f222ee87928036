#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anumber/vertex_subset.hpp"

namespace anumber {

/// Sorted list of vertex indices.
using Face = std::vector<int>;

/// Finite abstract simplicial complex stored by its facets.
///
/// Vertices carry VertexSubset labels (building-set elements or poset
/// elements) kept in CanonicalOrder; vertex i is labels()[i]. Facets are
/// sorted, mutually incomparable, and listed in lexicographic order, so two
/// complexes with the same faces compare equal. The default-constructed
/// complex is the empty complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// `facets` index into `labels` and may contain non-maximal faces;
  /// vertices that appear in no facet become singleton facets.
  SimplicialComplex(std::vector<VertexSubset> labels, std::vector<Face> facets);

  const std::vector<VertexSubset>& labels() const { return labels_; }
  const std::vector<Face>& facets() const { return facets_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  /// -1 for the empty complex.
  int dimension() const;
  bool is_pure() const;
  /// -1 when no vertex carries the label.
  int index_of(VertexSubset label) const;
  /// True if every label names a vertex and together they span a face.
  bool has_face(std::span<const VertexSubset> labels) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<VertexSubset> labels_;
  std::vector<Face> facets_;
};

/// Keeps the vertices whose label satisfies `keep` and every face spanned by
/// them.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex,
                                     const std::function<bool(VertexSubset)>& keep);

/// Cone over `complex` with a new apex vertex labelled `apex`.
SimplicialComplex cone(const SimplicialComplex& complex, VertexSubset apex);

inline constexpr std::size_t kDefaultMaxFaces = 4'000'000;

/// All faces grouped by dimension: result[d + 1] holds the d-faces, so
/// result[0] = {∅}. Each list is sorted. ResourceLimit above max_faces.
std::vector<std::vector<Face>> faces_by_dimension(const SimplicialComplex& complex,
                                                  std::size_t max_faces = kDefaultMaxFaces);

/// f[0] = 1 for the empty face, f[i + 1] = number of i-faces.
std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

/// h_k = sum_i (-1)^{k-i} binom(d-i, k-i) f_{i-1} with d = f.size() - 1.
std::vector<std::int64_t> h_vector_from_f(std::span<const std::int64_t> f);

/// DomainError when the complex is not pure.
std::vector<std::int64_t> h_vector(const SimplicialComplex& complex);

/// {"vertex_labels": [[...], ...], "facets": [[...], ...]}, canonical order.
std::string complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(std::string_view text);

}  // namespace anumber
