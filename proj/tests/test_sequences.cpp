#include <doctest.h>

#include "anumber/error.hpp"
#include "anumber/invariants.hpp"
#include "anumber/sequences.hpp"
#include "oracles.hpp"

using namespace anumber;

TEST_CASE("binomials match Pascal's triangle") {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      CHECK(binomial(n, k) == BigInt(static_cast<long>(oracle::pascal_binomial(n, k))));
    }
  }
}

TEST_CASE("catalan numbers") {
  const std::vector<long> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(catalan(static_cast<long>(k)) == expected[k]);
  }
}

TEST_CASE("catalan triangle rows telescope and follow Pascal's rule") {
  for (long n = 0; n <= 20; ++n) {
    BigInt row_sum = 0;
    for (long i = 0; i <= n / 2; ++i) {
      row_sum += catalan_triangle(n, i);
      if (n >= 1 && i <= (n - 1) / 2) {
        CHECK(catalan_triangle(n, i) ==
              catalan_triangle(n - 1, i) + (i ? catalan_triangle(n - 1, i - 1) : BigInt(0)));
      }
    }
    CHECK(row_sum == binomial(n, n / 2));
  }
  for (long m = 0; m <= 10; ++m) {
    CHECK(catalan_triangle(2 * m, m) == catalan(m));
    CHECK(catalan_triangle(2 * m + 1, m) == catalan(m + 1));
  }
  CHECK_THROWS_AS(catalan_triangle(4, 3), DomainError);
  CHECK_THROWS_AS(catalan_triangle(-1, 0), DomainError);
}

TEST_CASE("zigzag numbers count alternating permutations") {
  for (int k = 0; k <= 8; ++k) {
    CHECK(zigzag(k) == BigInt(static_cast<long>(oracle::alternating_permutations(k))));
  }
  auto table = zigzag_table(12);
  const std::vector<long> expected = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765};
  REQUIRE(table.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(table[k] == expected[k]);
}

TEST_CASE("closed forms agree with the DP for n <= 12") {
  for (auto family : {GraphFamily::path, GraphFamily::cycle, GraphFamily::complete, GraphFamily::star}) {
    for (long n = 0; n <= 12; ++n) {
      if (family == GraphFamily::cycle && (n == 1 || n == 2)) continue;
      auto g = generate(family, static_cast<int>(n));
      auto table = compute_sa_table(g);
      CAPTURE(family_name(family));
      CAPTURE(n);
      CHECK(closed_form_a_vector(family, n) == table.a_vector());
      CHECK(closed_form_sa(family, n) == table.sa());
      CHECK(closed_form_b(family, n) == table.b_total());
    }
  }
}

TEST_CASE("cycle boundary cases") {
  for (long m = 2; m <= 6; ++m) {
    auto table = compute_sa_table(generate(GraphFamily::cycle, static_cast<int>(2 * m)));
    BigInt sign = m % 2 == 0 ? 1 : -1;
    CHECK(table.a_vector()[static_cast<std::size_t>(m)] == binomial(2 * m, m) / 2);
    CHECK(closed_form_a(GraphFamily::cycle, 2 * m, m) == binomial(2 * m, m) / 2);
    CHECK(table.sa() == sign * binomial(2 * m - 1, m - 1));
  }
}

TEST_CASE("closed forms reject indices outside the range") {
  CHECK_THROWS_AS(closed_form_a(GraphFamily::path, 4, 3), DomainError);
  CHECK_THROWS_AS(closed_form_a(GraphFamily::path, 4, -1), DomainError);
}
