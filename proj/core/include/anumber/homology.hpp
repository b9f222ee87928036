#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "anumber/complex.hpp"

namespace anumber {

struct HomologyOptions {
  std::size_t max_faces = kDefaultMaxFaces;
};

/// Matrix of the simplicial boundary map d_k : C_k -> C_{k-1}, stored by
/// columns. Column j lists (row, coefficient) for the (k-1)-faces of the
/// j-th k-face; the coefficient of the face omitting position p is (-1)^p.
/// For k = 0 this is the augmentation C_0 -> C_{-1} = Q{∅}.
struct BoundaryMatrix {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

/// `faces` as returned by faces_by_dimension; requires 0 <= k < faces.size() - 1.
BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int k);

/// Whether lower * upper is the zero matrix (lower = d_{k-1}, upper = d_k).
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

/// Exact rank over Q by integer-preserving column elimination.
std::size_t rank(const BoundaryMatrix& matrix);

/// Reduced rational Betti numbers. ranks()[0] is degree -1.
class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<std::int64_t> reduced_ranks);

  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  /// Reduced rank in `degree` (>= -1); zero beyond the stored range.
  std::int64_t at(int degree) const;
  /// Highest degree with a stored entry.
  int max_degree() const { return static_cast<int>(ranks_.size()) - 2; }
  /// True if every nonzero rank sits in `degree`.
  bool concentrated_in(int degree) const;
  bool is_acyclic() const;
  /// Unreduced ranks starting at degree 0.
  std::vector<std::int64_t> unreduced() const;

  bool operator==(const BettiVector& other) const;

 private:
  std::vector<std::int64_t> ranks_;
};

BettiVector reduced_betti(const SimplicialComplex& complex, HomologyOptions options = {});

/// Alternating count of nonempty faces.
std::int64_t euler_char(const SimplicialComplex& complex);

}  // namespace anumber
