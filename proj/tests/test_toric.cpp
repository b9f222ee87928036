#include <doctest.h>

#include <random>
#include <set>

#include "anumber/corpus.hpp"
#include "anumber/error.hpp"
#include "anumber/toric.hpp"

using namespace anumber;

namespace {

using Rows = std::vector<std::vector<std::uint8_t>>;

Rows rows_of(const CharMatrixZ2& m) {
  Rows out;
  for (std::size_t i = 0; i < m.row_count(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

TEST_CASE("characteristic matrices of the pentagon") {
  auto b = graphical_building_set(generate(GraphFamily::path, 3));
  auto columns = std::vector<VertexSubset>{VertexSubset::of({0}), VertexSubset::of({1}),
                                           VertexSubset::of({2}), VertexSubset::of({0, 1}),
                                           VertexSubset::of({1, 2})};
  auto lambda = lambda_small_cover(b);
  CHECK(lambda.columns() == columns);
  CHECK(rows_of(lambda) == Rows{{1, 0, 1, 1, 1}, {0, 1, 1, 1, 0}});
  auto lambda_p = lambda_prime(b);
  CHECK(lambda_p.columns() == columns);
  CHECK(rows_of(lambda_p) == Rows{{1, 0, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}});

  // S = {1} (second coordinate) selects F_{1}, F_{2}, F_{01}.
  CHECK(lambda.row_sum(VertexSubset::of({1})) == std::vector<std::uint8_t>{0, 1, 1, 1, 0});
  CHECK(lambda.row_sum(VertexSubset::of({0, 1})) == std::vector<std::uint8_t>{1, 1, 0, 0, 1});
}

TEST_CASE("lambda_S equals lambda'_T(S)") {
  for (const auto& g : connected_graphs_up_to(6)) {
    if (g.order() < 2) continue;
    auto b = graphical_building_set(g);
    auto lambda = lambda_small_cover(b);
    auto lambda_p = lambda_prime(b);
    const int n = g.order() - 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      auto s = VertexSubset::from_bits(bits);
      auto t = t_of_s(s, n);
      CHECK(t.size() % 2 == 0);
      CHECK(lambda.row_sum(s) == lambda_p.row_sum(t));
    }
  }
}

TEST_CASE("T(S) is a bijection onto even subsets") {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::uint64_t> images;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      auto t = t_of_s(VertexSubset::from_bits(bits), n);
      CHECK(t.size() % 2 == 0);
      CHECK(t.is_subset_of(VertexSubset::full(n + 1)));
      images.insert(t.bits());
    }
    CHECK(images.size() == (std::size_t{1} << n));
  }
  CHECK_THROWS_AS(t_of_s(VertexSubset::of({3}), 3), DomainError);
}

TEST_CASE("small cases of every route") {
  for (auto method : {BettiMethod::recursion, BettiMethod::homology_T, BettiMethod::homology_S,
                      BettiMethod::product_fast_path}) {
    CAPTURE(method_name(method));
    CHECK(betti_report(SimpleGraph(0), method).betti == std::vector<BigInt>{1});
    CHECK(betti_report(SimpleGraph(1), method).betti == std::vector<BigInt>{1});
    CHECK(betti_report(generate(GraphFamily::complete, 2), method).betti == std::vector<BigInt>{1, 1});
    CHECK(betti_report(generate(GraphFamily::cycle, 5), method).betti == std::vector<BigInt>{1, 5, 10});
    CHECK(betti_report(generate(GraphFamily::path, 4), method).betti == std::vector<BigInt>{1, 3, 2});
  }
}

TEST_CASE("routes agree on the 5-vertex corpus and disconnected graphs") {
  std::vector<SimpleGraph> graphs;
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    auto reference = betti_via_recursion(g);
    CHECK(betti_via_T_sum(g).betti == reference.betti);
    CHECK(betti_via_S_sum(g).betti == reference.betti);
    CHECK(betti_via_product(g, TaSource::recursion).betti == reference.betti);
    CHECK(betti_via_product(g, TaSource::homology).betti == reference.betti);
    CHECK(betti_via_T_sum(g).euler == reference.euler);
  }
}

TEST_CASE("topological a-number equals the a-number") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      CHECK(topological_a_number(g) == abs(sa(g)));
    }
  }
}

TEST_CASE("product rank matches K''_T homology") {
  auto g = generate(GraphFamily::cycle, 6);
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    auto t = VertexSubset::from_bits(bits);
    if (t.size() % 2 != 0) {
      CHECK_THROWS_AS(reduced_rank_via_product(g, t), DomainError);
      continue;
    }
    auto expected = reduced_betti(kpp_T(g, t, {}));
    auto got = reduced_rank_via_product(g, t);
    CHECK(got.degree == static_cast<int>(t.size()) / 2 - 1);
    CHECK(expected.concentrated_in(got.degree));
    CHECK(BigInt(static_cast<long>(expected.at(got.degree))) == got.rank);
    CHECK(reduced_rank_via_product(g, t, TaSource::homology).rank == got.rank);
  }
}

TEST_CASE("complex toric Betti numbers are h-vectors") {
  auto k4 = generate(GraphFamily::complete, 4);
  CHECK(betti_complex_toric(k4) == std::vector<BigInt>{1, 11, 11, 1});
  auto two_edges = disjoint_union(generate(GraphFamily::complete, 2), generate(GraphFamily::complete, 2));
  CHECK(betti_complex_toric(two_edges) == std::vector<BigInt>{1, 2, 1});
  CHECK(betti_complex_toric(SimpleGraph(0)) == std::vector<BigInt>{1});
}

TEST_CASE("report JSON round trip") {
  auto report = betti_via_T_sum(generate(GraphFamily::star, 5));
  auto back = report_from_json(report_to_json(report));
  CHECK(back.graph == report.graph);
  CHECK(back.method == report.method);
  CHECK(back.betti == report.betti);
  CHECK(back.euler == report.euler);
  CHECK_THROWS_AS(report_from_json("{\"graph\": \"C~\"}"), MalformedInput);
  CHECK_THROWS_AS(report_from_json("[]"), MalformedInput);
  CHECK_THROWS_AS(report_from_json(
                      R"({"graph":"C~","method":"guess","betti":["1"],"euler":"1"})"),
                  MalformedInput);
}

TEST_CASE("method names") {
  for (auto method : {BettiMethod::recursion, BettiMethod::homology_T, BettiMethod::homology_S,
                      BettiMethod::product_fast_path}) {
    CHECK(parse_method(method_name(method)) == method);
  }
  CHECK(parse_method("T") == BettiMethod::homology_T);
  CHECK(parse_method("S") == BettiMethod::homology_S);
  CHECK(parse_method("product") == BettiMethod::product_fast_path);
  CHECK_THROWS_AS(parse_method("fast"), MalformedInput);
}

TEST_CASE("homology routes respect the cap") {
  auto g = generate(GraphFamily::path, 8);
  CHECK_THROWS_AS(betti_via_T_sum(g), ResourceLimit);
  CHECK_THROWS_AS(betti_via_S_sum(g), ResourceLimit);
  CHECK_NOTHROW(betti_via_recursion(g));
}
