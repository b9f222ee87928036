#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anumber/bigint.hpp"
#include "anumber/building_set.hpp"
#include "anumber/homology.hpp"
#include "anumber/invariants.hpp"

namespace anumber {

/// Z_2 matrix whose columns are the proper elements of a building set, in
/// CanonicalOrder.
class CharMatrixZ2 {
 public:
  CharMatrixZ2(std::vector<VertexSubset> columns, std::vector<std::vector<std::uint8_t>> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return columns_.size(); }
  const std::vector<VertexSubset>& columns() const { return columns_; }
  const std::vector<std::uint8_t>& row(std::size_t i) const { return rows_.at(i); }
  std::uint8_t at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  /// Sum mod 2 of the rows listed in `rows`.
  std::vector<std::uint8_t> row_sum(VertexSubset rows) const;

  bool operator==(const CharMatrixZ2&) const = default;

 private:
  std::vector<VertexSubset> columns_;
  std::vector<std::vector<std::uint8_t>> rows_;
};

/// Incidence matrix: entry (i, I) = 1 iff i ∈ I; host_size rows.
CharMatrixZ2 lambda_prime(const BuildingSet& building_set);

/// Characteristic matrix of the real toric manifold, mod 2. With the last
/// host point d = host_size - 1 as the distinguished coordinate, row i
/// (0 <= i < d) is row i of lambda_prime plus row d of lambda_prime.
CharMatrixZ2 lambda_small_cover(const BuildingSet& building_set);

/// T(S) = S if |S| is even, S ∪ {n} otherwise; a bijection from subsets of
/// {0..n-1} onto even subsets of {0..n}.
VertexSubset t_of_s(VertexSubset s, int n);

enum class BettiMethod { recursion, homology_T, homology_S, product_fast_path };

std::string_view method_name(BettiMethod method);
/// Accepts the names returned by method_name, plus "T", "S" and "product".
BettiMethod parse_method(std::string_view name);

/// How the product route obtains ta(G_i) for each even component.
enum class TaSource { recursion, homology };

struct BettiReport {
  SimpleGraph graph;
  BettiMethod method = BettiMethod::recursion;
  std::vector<BigInt> betti;
  BigInt euler;
};

struct ToricOptions {
  DpOptions dp;
  ComplexOptions complex;
  HomologyOptions homology;
};

/// beta_i = sum over even T of rank H~_{i-1}(K'_T). Disconnected graphs are
/// handled by convolving the reports of their components.
BettiReport betti_via_T_sum(const SimpleGraph& graph, ToricOptions options = {});

/// beta_i = sum over S ⊆ {0..n-1} of rank H~_{i-1}(P_S), with P_S selected
/// by the rows of lambda_small_cover.
BettiReport betti_via_S_sum(const SimpleGraph& graph, ToricOptions options = {});

/// beta_i = a_i(G), chi = b(G) from the subset DP.
BettiReport betti_via_recursion(const SimpleGraph& graph, ToricOptions options = {});

/// beta_i = sum over |T| = 2i of reduced_rank_via_product(G, T).
BettiReport betti_via_product(const SimpleGraph& graph, TaSource source = TaSource::recursion,
                              ToricOptions options = {});

BettiReport betti_report(const SimpleGraph& graph, BettiMethod method, ToricOptions options = {});

/// The single nonzero reduced Betti number of K''_T.
struct ReducedRank {
  int degree = -1;
  BigInt rank;
};

/// degree = |T|/2 - 1; rank = product of ta over the components of G|_T, or
/// zero when some component has odd order. T must have even size.
ReducedRank reduced_rank_via_product(const SimpleGraph& graph, VertexSubset t,
                                     TaSource source = TaSource::recursion,
                                     ToricOptions options = {});

/// Topological a-number: top reduced rank of K_G^odd (1 for the empty graph).
BigInt topological_a_number(const SimpleGraph& graph, ToricOptions options = {});

/// Complex of the facet union P'_T (|T ∩ I| odd) inside `nested_complex`.
SimplicialComplex p_prime_T(const SimplicialComplex& nested_complex, VertexSubset t);
/// Complex of P_S: facets F_I whose entry in the row sum lambda_S is 1.
SimplicialComplex p_S(const SimplicialComplex& nested_complex, const CharMatrixZ2& lambda,
                      VertexSubset s);

/// h-vector of the nested set complex of B(G): the even Betti numbers of the
/// complex toric manifold. Products over components for disconnected G.
std::vector<BigInt> betti_complex_toric(const SimpleGraph& graph, ToricOptions options = {});

/// {"graph": graph6, "method": name, "betti": ["1", ...], "euler": "0"}.
std::string report_to_json(const BettiReport& report);
BettiReport report_from_json(std::string_view text);

}  // namespace anumber
