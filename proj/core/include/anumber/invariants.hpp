#pragma once

#include <span>
#include <vector>

#include "anumber/bigint.hpp"
#include "anumber/graph.hpp"

namespace anumber {

struct DpOptions {
  /// Largest host order accepted by the subset DP.
  int max_vertices = 20;
};

/// Signed a-numbers of every induced subgraph of a host graph, indexed by
/// the bit pattern of the vertex subset, together with the derived
/// a-vector and total a-number.
class ANumberTable {
 public:
  /// Derives a_vector and b_total from the per-subset values.
  /// `sa_by_subset` must have 2^host.order() entries.
  ANumberTable(SimpleGraph host, std::vector<BigInt> sa_by_subset);

  const SimpleGraph& host() const { return host_; }
  const BigInt& sa(VertexSubset subset) const { return sa_[subset.bits()]; }
  /// sa of the whole host.
  const BigInt& sa() const { return sa_.back(); }
  std::span<const BigInt> sa_by_subset() const { return sa_; }
  /// a_vector()[i] = sum over |I| = 2i of |sa(I)|, i = 0..floor(n/2).
  const std::vector<BigInt>& a_vector() const { return a_; }
  const BigInt& b_total() const { return b_; }

 private:
  SimpleGraph host_;
  std::vector<BigInt> sa_;
  std::vector<BigInt> a_;
  BigInt b_;
};

/// Layered subset DP: disconnected subsets factor over components, connected
/// even subsets take minus the sum over proper subsets, maintained by a
/// subset-sum (zeta) transform per cardinality layer.
/// Throws ResourceLimit above options.max_vertices.
ANumberTable compute_sa_table(const SimpleGraph& graph, DpOptions options = {});

/// Reference implementation enumerating every proper subset of every
/// connected even subset (Theta(3^n)).
ANumberTable compute_sa_table_naive(const SimpleGraph& graph, DpOptions options = {});

BigInt sa(const SimpleGraph& graph, DpOptions options = {});
std::vector<BigInt> a_vector(const SimpleGraph& graph, DpOptions options = {});
BigInt b_total(const SimpleGraph& graph, DpOptions options = {});

/// a-vector of the disjoint union of the tables' hosts.
std::vector<BigInt> a_vector_by_convolution(std::span<const ANumberTable> components);

/// Subsets with |I| even and sa(I) != 0 whose sign differs from (-1)^{|I|/2}.
/// Empty for every table produced by the DP routes.
std::vector<VertexSubset> sign_law_violations(const ANumberTable& table);

}  // namespace anumber
