#include "anumber/sequences.hpp"

#include <string>

#include "anumber/error.hpp"

namespace anumber {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt catalan(long k) {
  if (k < 0) throw DomainError("catalan index must be nonnegative");
  return binomial(2 * k, k) / (k + 1);
}

BigInt catalan_triangle(long n, long i) {
  if (n < 0 || i < 0 || 2 * i > n) {
    throw DomainError("catalan_triangle(" + std::to_string(n) + ", " + std::to_string(i) +
                      ") needs 0 <= i <= n/2");
  }
  return binomial(n, i) - binomial(n, i - 1);
}

std::vector<BigInt> zigzag_table(long max_k) {
  if (max_k < 0) throw DomainError("zigzag index must be nonnegative");
  // Row r of the Seidel-Entringer triangle: E(r, 0) = 0 for r > 0 and
  // E(r, j) = E(r, j - 1) + E(r - 1, r - j); A_r = E(r, r).
  std::vector<BigInt> values{BigInt(1)};
  std::vector<BigInt> prev{BigInt(1)};
  for (long r = 1; r <= max_k; ++r) {
    std::vector<BigInt> row(static_cast<std::size_t>(r + 1));
    row[0] = 0;
    for (long j = 1; j <= r; ++j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(r - j)];
    }
    values.push_back(row.back());
    prev = std::move(row);
  }
  return values;
}

BigInt zigzag(long k) { return zigzag_table(k).back(); }

namespace {

int sign_of_half(long m) { return m % 2 == 0 ? 1 : -1; }

}  // namespace

BigInt closed_form_a(GraphFamily family, long n, long i) {
  if (n < 0 || i < 0 || 2 * i > n) {
    throw DomainError("closed_form_a: index i=" + std::to_string(i) + " outside 0.." +
                      std::to_string(n < 0 ? -1 : n / 2));
  }
  if (i == 0) return 1;
  switch (family) {
    case GraphFamily::path:
      return catalan_triangle(n, i);
    case GraphFamily::cycle:
      if (2 * i < n) return binomial(n, i);
      return binomial(2 * i, i) / 2;
    case GraphFamily::complete:
      return binomial(n, 2 * i) * zigzag(2 * i);
    case GraphFamily::star:
      return binomial(n - 1, 2 * i - 1) * zigzag(2 * i - 1);
  }
  return 0;
}

std::vector<BigInt> closed_form_a_vector(GraphFamily family, long n) {
  std::vector<BigInt> out;
  for (long i = 0; 2 * i <= n; ++i) out.push_back(closed_form_a(family, n, i));
  return out;
}

BigInt closed_form_sa(GraphFamily family, long n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  if (n == 0) return 1;
  if (n % 2 != 0) return 0;
  const long m = n / 2;
  const int sign = sign_of_half(m);
  switch (family) {
    case GraphFamily::path: return sign * catalan(m);
    case GraphFamily::cycle: return sign * binomial(2 * m - 1, m - 1);
    case GraphFamily::complete: return sign * zigzag(2 * m);
    case GraphFamily::star: return sign * zigzag(2 * m - 1);
  }
  return 0;
}

BigInt closed_form_b(GraphFamily family, long n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  if (n == 0) return 1;
  if (n % 2 == 0) return 0;
  const long m = (n - 1) / 2;
  const int sign = sign_of_half(m);
  switch (family) {
    case GraphFamily::path: return sign * catalan(m);
    case GraphFamily::cycle: return sign * binomial(2 * m, m);
    case GraphFamily::complete: return sign * zigzag(2 * m + 1);
    case GraphFamily::star: return sign * zigzag(2 * m);
  }
  return 0;
}

}  // namespace anumber
