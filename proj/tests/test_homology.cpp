#include <doctest.h>

#include <random>

#include "anumber/building_set.hpp"
#include "anumber/corpus.hpp"
#include "anumber/error.hpp"
#include "anumber/homology.hpp"
#include "oracles.hpp"

using namespace anumber;

namespace {

SimplicialComplex from_facets(int vertices, std::vector<Face> facets) {
  std::vector<VertexSubset> labels;
  for (int v = 0; v < vertices; ++v) labels.push_back(VertexSubset::singleton(v));
  return SimplicialComplex(std::move(labels), std::move(facets));
}

SimplicialComplex simplex_boundary(int vertices) {
  std::vector<Face> facets;
  for (int skip = 0; skip < vertices; ++skip) {
    Face f;
    for (int v = 0; v < vertices; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(f);
  }
  return from_facets(vertices, facets);
}

// Seven-vertex triangulation of the torus.
SimplicialComplex torus() {
  std::vector<Face> facets;
  for (int i = 0; i < 7; ++i) {
    Face a{i, (i + 1) % 7, (i + 3) % 7};
    Face b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    facets.push_back(a);
    facets.push_back(b);
  }
  return from_facets(7, facets);
}

std::vector<long long> as_list(const BettiVector& b) {
  return {b.ranks().begin(), b.ranks().end()};
}

}  // namespace

TEST_CASE("reduced Betti numbers of standard spaces") {
  CHECK(reduced_betti(SimplicialComplex{}).at(-1) == 1);
  CHECK(reduced_betti(from_facets(1, {{0}})).is_acyclic());
  CHECK(reduced_betti(from_facets(2, {{0}, {1}})).at(0) == 1);
  for (int k = 2; k <= 6; ++k) {
    auto sphere = reduced_betti(simplex_boundary(k + 1));
    CHECK(sphere.concentrated_in(k - 1));
    CHECK(sphere.at(k - 1) == 1);
  }
  auto t = reduced_betti(torus());
  CHECK(t.at(0) == 0);
  CHECK(t.at(1) == 2);
  CHECK(t.at(2) == 1);
  CHECK(t.unreduced() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(euler_char(torus()) == 0);
}

TEST_CASE("boundary matrices compose to zero") {
  for (const auto& g : connected_graphs_up_to(5)) {
    auto faces = faces_by_dimension(nested_set_complex(graphical_building_set(g)));
    for (std::size_t k = 1; k + 1 < faces.size(); ++k) {
      CHECK(composes_to_zero(boundary_matrix(faces, static_cast<int>(k) - 1),
                             boundary_matrix(faces, static_cast<int>(k))));
    }
  }
}

TEST_CASE("sparse rank agrees with dense rational elimination") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    BoundaryMatrix m;
    m.rows = 1 + rng() % 12;
    m.cols = 1 + rng() % 12;
    m.columns.resize(m.cols);
    std::vector<std::vector<mpq_class>> dense(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (std::size_t j = 0; j < m.cols; ++j) {
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (rng() % 3 != 0) continue;
        int v = static_cast<int>(rng() % 7) - 3;
        if (v == 0) continue;
        m.columns[j].emplace_back(i, v);
        dense[i][j] = v;
      }
    }
    CHECK(rank(m) == oracle::dense_rank(dense));
  }
}

TEST_CASE("homology of nested set complexes matches the dense oracle") {
  for (const auto& g : connected_graphs_up_to(5)) {
    auto complex = nested_set_complex(graphical_building_set(g));
    auto k = g.order() % 2 == 0 ? k_odd(g) : complex;
    for (const auto& c : {complex, k}) {
      auto expected = oracle::reduced_betti(c.facets());
      auto got = as_list(reduced_betti(c));
      got.resize(std::max(got.size(), expected.size()), 0);
      expected.resize(got.size(), 0);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("nested set complexes are homology spheres") {
  for (const auto& g : connected_graphs_up_to(6)) {
    auto b = reduced_betti(nested_set_complex(graphical_building_set(g)));
    CHECK(b.concentrated_in(g.order() - 2));
    CHECK(b.at(g.order() - 2) == 1);
  }
}

TEST_CASE("Euler-Poincare identity") {
  for (const auto& g : connected_graphs_up_to(6)) {
    auto complex = nested_set_complex(graphical_building_set(g));
    auto b = reduced_betti(complex);
    std::int64_t alternating = 0;
    for (int d = -1; d <= b.max_degree(); ++d) alternating += (d % 2 == 0 ? 1 : -1) * b.at(d);
    // reduced chi = chi - 1
    CHECK(alternating == euler_char(complex) - 1);
  }
}

TEST_CASE("face cap") {
  auto complex = nested_set_complex(graphical_building_set(generate(GraphFamily::complete, 5)));
  CHECK_THROWS_AS(reduced_betti(complex, HomologyOptions{100}), ResourceLimit);
}

TEST_CASE("f- and h-vectors") {
  auto c = simplex_boundary(4);
  CHECK(f_vector(c) == std::vector<std::int64_t>{1, 4, 6, 4});
  CHECK(h_vector(c) == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(h_vector(from_facets(3, {{0, 1}, {2}})), DomainError);
}
