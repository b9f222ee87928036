#include <doctest.h>

#include <random>

#include "anumber/corpus.hpp"
#include "anumber/error.hpp"
#include "anumber/invariants.hpp"
#include "helpers.hpp"

using namespace anumber;

namespace {

SimpleGraph random_graph(std::mt19937& rng, int n, unsigned density) {
  std::vector<SimpleGraph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 100 < density) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, edges);
}

std::vector<BigInt> to_big(const std::vector<long long>& values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace

TEST_CASE("worked values") {
  CHECK(sa(generate(GraphFamily::path, 6)) == -5);
  CHECK(a_vector(generate(GraphFamily::path, 6)) == std::vector<BigInt>{1, 5, 9, 5});
  CHECK(b_total(generate(GraphFamily::path, 6)) == 0);
  CHECK(sa(SimpleGraph(0)) == 1);
  CHECK(sa(SimpleGraph(1)) == 0);
  CHECK(sa(generate(GraphFamily::complete, 2)) == -1);
  CHECK(sa(SimpleGraph(2)) == 0);  // two isolated vertices: odd components
  CHECK(sa(generate(GraphFamily::complete, 4)) == 5);
  CHECK(a_vector(SimpleGraph(0)) == std::vector<BigInt>{1});
}

TEST_CASE("DP agrees with the recursive definition on the 6-vertex corpus") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      oracle::SignedANumber brute(testing_support::to_matrix(g));
      auto table = compute_sa_table(g);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i) {
          if (bits >> i & 1) verts.push_back(i);
        }
        REQUIRE(table.sa(VertexSubset::from_bits(bits)) == BigInt(static_cast<long>(brute(verts))));
      }
      CHECK(table.a_vector() == to_big(brute.a_vector()));
    }
  }
}

TEST_CASE("fast and naive DP agree on random graphs up to 11 vertices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 11);
    auto g = random_graph(rng, n, 20 + static_cast<unsigned>(rng() % 70));
    auto fast = compute_sa_table(g);
    auto naive = compute_sa_table_naive(g);
    CHECK(std::equal(fast.sa_by_subset().begin(), fast.sa_by_subset().end(),
                     naive.sa_by_subset().begin(), naive.sa_by_subset().end()));
    CHECK(fast.a_vector() == naive.a_vector());
    CHECK(fast.b_total() == naive.b_total());
  }
}

TEST_CASE("sign law holds on every subset") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 50);
    CHECK(sign_law_violations(compute_sa_table(g)).empty());
  }
}

TEST_CASE("b equals the alternating sum of the a-vector") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto table = compute_sa_table(random_graph(rng, static_cast<int>(rng() % 12), 40));
    BigInt alt = 0;
    for (std::size_t i = 0; i < table.a_vector().size(); ++i) {
      alt += (i % 2 == 0 ? 1 : -1) * table.a_vector()[i];
    }
    CHECK(alt == table.b_total());
  }
}

TEST_CASE("multiplicativity over disjoint unions") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_graph(rng, 1 + static_cast<int>(rng() % 6), 60);
    auto h = random_graph(rng, 1 + static_cast<int>(rng() % 6), 60);
    auto u = disjoint_union(g, h);
    CHECK(sa(u) == sa(g) * sa(h));
    CHECK(b_total(u) == b_total(g) * b_total(h));
    std::vector<ANumberTable> parts{compute_sa_table(g), compute_sa_table(h)};
    auto via_parts = a_vector_by_convolution(parts);
    auto direct = a_vector(u);
    via_parts.resize(direct.size(), BigInt(0));
    CHECK(via_parts == direct);
  }
}

TEST_CASE("odd order connected graphs vanish") {
  for (int n = 1; n <= 7; n += 2) {
    for (const auto& g : connected_graphs(n)) CHECK(sa(g) == 0);
  }
}

TEST_CASE("resource caps") {
  auto big = generate(GraphFamily::path, 21);
  CHECK_THROWS_AS(compute_sa_table(big), ResourceLimit);
  CHECK_THROWS_AS(compute_sa_table(generate(GraphFamily::path, 8), DpOptions{7}), ResourceLimit);
  CHECK_THROWS_AS(compute_sa_table_naive(generate(GraphFamily::path, 8), DpOptions{7}), ResourceLimit);
  CHECK_NOTHROW(compute_sa_table(generate(GraphFamily::path, 8), DpOptions{8}));
}
