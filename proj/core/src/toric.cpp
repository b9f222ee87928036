#include "anumber/toric.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "anumber/error.hpp"

namespace anumber {

CharMatrixZ2::CharMatrixZ2(std::vector<VertexSubset> columns,
                           std::vector<std::vector<std::uint8_t>> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != columns_.size()) throw std::invalid_argument("ragged Z_2 matrix");
  }
}

std::vector<std::uint8_t> CharMatrixZ2::row_sum(VertexSubset rows) const {
  std::vector<std::uint8_t> out(columns_.size(), 0);
  for (int i : rows) {
    const auto& r = row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < r.size(); ++j) out[j] ^= r[j];
  }
  return out;
}

namespace {

void require_connected(const BuildingSet& building_set) {
  if (!building_set.connected()) {
    throw DomainError("characteristic matrices need a connected building set");
  }
}

}  // namespace

CharMatrixZ2 lambda_prime(const BuildingSet& building_set) {
  require_connected(building_set);
  auto columns = building_set.proper_elements();
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < building_set.host_size(); ++i) {
    std::vector<std::uint8_t> row;
    row.reserve(columns.size());
    for (auto element : columns) row.push_back(element.contains(i) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return CharMatrixZ2(std::move(columns), std::move(rows));
}

CharMatrixZ2 lambda_small_cover(const BuildingSet& building_set) {
  require_connected(building_set);
  const int last = building_set.host_size() - 1;
  auto columns = building_set.proper_elements();
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < last; ++i) {
    std::vector<std::uint8_t> row;
    row.reserve(columns.size());
    for (auto element : columns) {
      row.push_back(static_cast<std::uint8_t>(element.contains(i) != element.contains(last)));
    }
    rows.push_back(std::move(row));
  }
  return CharMatrixZ2(std::move(columns), std::move(rows));
}

VertexSubset t_of_s(VertexSubset s, int n) {
  if (n < 0 || n >= VertexSubset::kMaxVertices || !s.is_subset_of(VertexSubset::full(n))) {
    throw DomainError("S must be a subset of {0..n-1}");
  }
  return s.size() % 2 == 0 ? s : s.with(n);
}

std::string_view method_name(BettiMethod method) {
  switch (method) {
    case BettiMethod::recursion: return "recursion";
    case BettiMethod::homology_T: return "homology_T";
    case BettiMethod::homology_S: return "homology_S";
    case BettiMethod::product_fast_path: return "product_fast_path";
  }
  return "?";
}

BettiMethod parse_method(std::string_view name) {
  if (name == "recursion") return BettiMethod::recursion;
  if (name == "homology_T" || name == "T") return BettiMethod::homology_T;
  if (name == "homology_S" || name == "S") return BettiMethod::homology_S;
  if (name == "product_fast_path" || name == "product") return BettiMethod::product_fast_path;
  throw MalformedInput("unknown method '" + std::string(name) +
                       "' (expected recursion, homology_T, homology_S or product_fast_path)");
}

SimplicialComplex p_prime_T(const SimplicialComplex& nested_complex, VertexSubset t) {
  return induced_subcomplex(nested_complex,
                            [t](VertexSubset i) { return (i & t).size() % 2 != 0; });
}

SimplicialComplex p_S(const SimplicialComplex& nested_complex, const CharMatrixZ2& lambda,
                      VertexSubset s) {
  const auto selected = lambda.row_sum(s);
  const auto& columns = lambda.columns();
  return induced_subcomplex(nested_complex, [&](VertexSubset i) {
    auto it = std::lower_bound(columns.begin(), columns.end(), i, CanonicalOrder{});
    if (it == columns.end() || *it != i) throw DomainError("complex vertex is not a column of lambda");
    return selected[static_cast<std::size_t>(it - columns.begin())] != 0;
  });
}

namespace {

// Drops trailing zeros beyond floor(n/2) so every route reports the same
// length as the a-vector.
std::vector<BigInt> normalized(std::vector<BigInt> betti, int order) {
  const std::size_t minimum = static_cast<std::size_t>(order / 2 + 1);
  while (betti.size() > minimum && betti.back() == 0) betti.pop_back();
  betti.resize(std::max(betti.size(), minimum), BigInt(0));
  return betti;
}

BigInt alternating_sum(const std::vector<BigInt>& betti) {
  BigInt out = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i % 2 == 0) {
      out += betti[i];
    } else {
      out -= betti[i];
    }
  }
  return out;
}

BettiReport finish(const SimpleGraph& graph, BettiMethod method, std::vector<BigInt> betti) {
  BettiReport report;
  report.graph = graph;
  report.method = method;
  report.betti = normalized(std::move(betti), graph.order());
  report.euler = alternating_sum(report.betti);
  return report;
}

// Sum over selections of reduced ranks shifted up by one degree.
template <typename Select>
std::vector<BigInt> suciu_trevisan_sum(int order, std::uint64_t selection_count, Select&& select,
                                       const HomologyOptions& homology) {
  std::vector<BigInt> betti(static_cast<std::size_t>(std::max(order, 1)), BigInt(0));
  for (std::uint64_t bits = 0; bits < selection_count; ++bits) {
    auto sub = select(bits);
    if (!sub) continue;
    auto ranks = reduced_betti(*sub, homology);
    for (int degree = -1; degree <= ranks.max_degree(); ++degree) {
      auto r = ranks.at(degree);
      if (r == 0) continue;
      const auto slot = static_cast<std::size_t>(degree + 1);
      if (slot >= betti.size()) betti.resize(slot + 1, BigInt(0));
      betti[slot] += r;
    }
  }
  return betti;
}

// Applies `connected_route` to each component and convolves.
template <typename Route>
std::vector<BigInt> over_components(const SimpleGraph& graph, Route&& connected_route) {
  std::vector<BigInt> betti{BigInt(1)};
  for (auto part : components_within(graph, graph.vertices())) {
    betti = convolve(betti, connected_route(induced_subgraph(graph, part)));
  }
  return betti;
}

SimplicialComplex nested_complex_of(const SimpleGraph& connected, const ToricOptions& options) {
  return nested_set_complex(graphical_building_set(connected), options.complex);
}

std::vector<BigInt> t_sum_connected(const SimpleGraph& g, const ToricOptions& options) {
  const int n = g.order();
  if (n > options.complex.max_host_size) {
    throw ResourceLimit("homology route on " + std::to_string(n) +
                        " vertices exceeds the cap of " +
                        std::to_string(options.complex.max_host_size));
  }
  const auto nested = nested_complex_of(g, options);
  return suciu_trevisan_sum(
      n, std::uint64_t{1} << n,
      [&](std::uint64_t bits) -> std::optional<SimplicialComplex> {
        auto t = VertexSubset::from_bits(bits);
        if (t.size() % 2 != 0) return std::nullopt;
        return p_prime_T(nested, t);
      },
      options.homology);
}

std::vector<BigInt> s_sum_connected(const SimpleGraph& g, const ToricOptions& options) {
  const int n = g.order();
  if (n > options.complex.max_host_size) {
    throw ResourceLimit("homology route on " + std::to_string(n) +
                        " vertices exceeds the cap of " +
                        std::to_string(options.complex.max_host_size));
  }
  const auto building_set = graphical_building_set(g);
  const auto nested = nested_set_complex(building_set, options.complex);
  const auto lambda = lambda_small_cover(building_set);
  return suciu_trevisan_sum(
      n, std::uint64_t{1} << (n - 1),
      [&](std::uint64_t bits) -> std::optional<SimplicialComplex> {
        return p_S(nested, lambda, VertexSubset::from_bits(bits));
      },
      options.homology);
}

BigInt homology_ta_connected(const SimpleGraph& g, const ToricOptions& options) {
  if (g.order() == 0) return 1;
  if (g.order() % 2 != 0) return 0;
  auto ranks = reduced_betti(k_odd(g, options.complex), options.homology);
  return ranks.at(g.order() / 2 - 1);
}

}  // namespace

BettiReport betti_via_T_sum(const SimpleGraph& graph, ToricOptions options) {
  auto betti = over_components(graph, [&](const SimpleGraph& g) { return t_sum_connected(g, options); });
  return finish(graph, BettiMethod::homology_T, std::move(betti));
}

BettiReport betti_via_S_sum(const SimpleGraph& graph, ToricOptions options) {
  auto betti = over_components(graph, [&](const SimpleGraph& g) { return s_sum_connected(g, options); });
  return finish(graph, BettiMethod::homology_S, std::move(betti));
}

BettiReport betti_via_recursion(const SimpleGraph& graph, ToricOptions options) {
  auto table = compute_sa_table(graph, options.dp);
  BettiReport report;
  report.graph = graph;
  report.method = BettiMethod::recursion;
  report.betti = normalized(table.a_vector(), graph.order());
  report.euler = table.b_total();
  return report;
}

BigInt topological_a_number(const SimpleGraph& graph, ToricOptions options) {
  BigInt product = 1;
  for (auto part : components_within(graph, graph.vertices())) {
    if (part.size() % 2 != 0) return 0;
    product *= homology_ta_connected(induced_subgraph(graph, part), options);
  }
  return product;
}

ReducedRank reduced_rank_via_product(const SimpleGraph& graph, VertexSubset t, TaSource source,
                                     ToricOptions options) {
  if (!t.is_subset_of(graph.vertices())) throw DomainError("T must be a subset of V(G)");
  if (t.size() % 2 != 0) throw DomainError("T must have even size, got " + t.to_string());
  ReducedRank out;
  out.degree = t.size() / 2 - 1;
  out.rank = 1;
  for (auto part : components_within(graph, t)) {
    if (part.size() % 2 != 0) {
      out.rank = 0;
      return out;
    }
  }
  for (auto part : components_within(graph, t)) {
    auto piece = induced_subgraph(graph, part);
    out.rank *= source == TaSource::recursion ? BigInt(abs(sa(piece, options.dp)))
                                              : homology_ta_connected(piece, options);
  }
  return out;
}

BettiReport betti_via_product(const SimpleGraph& graph, TaSource source, ToricOptions options) {
  const int n = graph.order();
  std::vector<BigInt> betti(static_cast<std::size_t>(n / 2 + 1), BigInt(0));
  if (source == TaSource::recursion) {
    // One table serves every component: ta(G|_C) = |sa(C)|.
    auto table = compute_sa_table(graph, options.dp);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      auto t = VertexSubset::from_bits(bits);
      if (t.size() % 2 != 0) continue;
      BigInt rank = 1;
      for (auto part : components_within(graph, t)) rank *= abs(table.sa(part));
      betti[static_cast<std::size_t>(t.size() / 2)] += rank;
    }
  } else {
    std::map<VertexSubset, BigInt> ta_cache;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      auto t = VertexSubset::from_bits(bits);
      if (t.size() % 2 != 0) continue;
      BigInt rank = 1;
      for (auto part : components_within(graph, t)) {
        if (part.size() % 2 != 0) {
          rank = 0;
          break;
        }
        auto [it, fresh] = ta_cache.try_emplace(part);
        if (fresh) it->second = homology_ta_connected(induced_subgraph(graph, part), options);
        rank *= it->second;
      }
      betti[static_cast<std::size_t>(t.size() / 2)] += rank;
    }
  }
  return finish(graph, BettiMethod::product_fast_path, std::move(betti));
}

BettiReport betti_report(const SimpleGraph& graph, BettiMethod method, ToricOptions options) {
  switch (method) {
    case BettiMethod::recursion: return betti_via_recursion(graph, options);
    case BettiMethod::homology_T: return betti_via_T_sum(graph, options);
    case BettiMethod::homology_S: return betti_via_S_sum(graph, options);
    case BettiMethod::product_fast_path: return betti_via_product(graph, TaSource::recursion, options);
  }
  throw std::invalid_argument("unknown method");
}

std::vector<BigInt> betti_complex_toric(const SimpleGraph& graph, ToricOptions options) {
  return over_components(graph, [&](const SimpleGraph& g) {
    std::vector<BigInt> out;
    for (auto h : h_vector(nested_complex_of(g, options))) out.emplace_back(static_cast<long>(h));
    return out;
  });
}

}  // namespace anumber
