#include "anumber/invariants.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "anumber/error.hpp"

namespace anumber {

ANumberTable::ANumberTable(SimpleGraph host, std::vector<BigInt> sa_by_subset)
    : host_(std::move(host)), sa_(std::move(sa_by_subset)) {
  const int n = host_.order();
  if (sa_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("sa table size does not match 2^n");
  }
  a_.assign(static_cast<std::size_t>(n / 2 + 1), BigInt(0));
  b_ = 0;
  for (std::uint64_t bits = 0; bits < sa_.size(); ++bits) {
    const BigInt& value = sa_[bits];
    if (value == 0) continue;
    b_ += value;
    a_[static_cast<std::size_t>(std::popcount(bits) / 2)] += abs(value);
  }
}

namespace {

void check_cap(const SimpleGraph& graph, const DpOptions& options) {
  const int n = graph.order();
  if (n <= options.max_vertices) return;
  const double additions = std::ldexp(1.0, n) * n * (n / 2);
  std::ostringstream msg;
  msg << "graph has " << n << " vertices, above the DP cap of " << options.max_vertices
      << " (2^" << n << " subsets, about " << std::setprecision(3) << additions
      << " big-integer additions)";
  throw ResourceLimit(msg.str());
}

std::vector<std::vector<std::uint32_t>> subsets_by_size(int n) {
  std::vector<std::vector<std::uint32_t>> levels(static_cast<std::size_t>(n + 1));
  for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
    levels[static_cast<std::size_t>(std::popcount(bits))].push_back(bits);
  }
  return levels;
}

// Value of sa(I) when G|_I is disconnected or odd; returns false when the
// connected-even branch applies instead.
bool factored_value(const SimpleGraph& graph, std::uint32_t bits,
                    const std::vector<BigInt>& sa, BigInt& out) {
  auto subset = VertexSubset::from_bits(bits);
  auto parts = components_within(graph, subset);
  if (parts.size() > 1) {
    out = 1;
    for (auto part : parts) {
      if (part.size() % 2 != 0) {
        out = 0;
        return true;
      }
    }
    for (auto part : parts) out *= sa[part.bits()];
    return true;
  }
  if (subset.size() % 2 != 0) {
    out = 0;
    return true;
  }
  return false;
}

void assert_sign_law(const ANumberTable& table) {
  auto bad = sign_law_violations(table);
  if (!bad.empty()) {
    throw std::logic_error("sign law violated at subset " + bad.front().to_string());
  }
}

}  // namespace

ANumberTable compute_sa_table(const SimpleGraph& graph, DpOptions options) {
  check_cap(graph, options);
  const int n = graph.order();
  const std::size_t size = std::size_t{1} << n;
  const auto levels = subsets_by_size(n);

  std::vector<BigInt> sa(size);
  // below[I] = sum of sa(J) over J ⊆ I with |J| smaller than the level
  // currently being filled. Odd layers are identically zero and skipped.
  std::vector<BigInt> below(size, BigInt(1));
  std::vector<BigInt> layer(size);
  sa[0] = 1;

  for (int k = 1; k <= n; ++k) {
    for (auto bits : levels[static_cast<std::size_t>(k)]) {
      if (!factored_value(graph, bits, sa, sa[bits])) sa[bits] = -below[bits];
    }
    if (k % 2 != 0 || k == n) continue;

    for (std::size_t bits = 0; bits < size; ++bits) {
      if (std::popcount(bits) == k) {
        layer[bits] = sa[bits];
      } else {
        layer[bits] = 0;
      }
    }
    for (int b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t bits = 0; bits < size; ++bits) {
        // layer[bits ^ bit] is zero unless it has at least k elements.
        if ((bits & bit) && std::popcount(bits) > k) layer[bits] += layer[bits ^ bit];
      }
    }
    for (std::size_t bits = 0; bits < size; ++bits) {
      if (std::popcount(bits) > k && layer[bits] != 0) below[bits] += layer[bits];
    }
  }

  ANumberTable table(graph, std::move(sa));
  assert_sign_law(table);
  return table;
}

ANumberTable compute_sa_table_naive(const SimpleGraph& graph, DpOptions options) {
  check_cap(graph, options);
  const int n = graph.order();
  const auto levels = subsets_by_size(n);
  std::vector<BigInt> sa(std::size_t{1} << n);
  sa[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (auto bits : levels[static_cast<std::size_t>(k)]) {
      if (factored_value(graph, bits, sa, sa[bits])) continue;
      BigInt sum = 0;
      for (std::uint32_t sub = (bits - 1) & bits;; sub = (sub - 1) & bits) {
        sum += sa[sub];
        if (sub == 0) break;
      }
      sa[bits] = -sum;
    }
  }
  ANumberTable table(graph, std::move(sa));
  assert_sign_law(table);
  return table;
}

BigInt sa(const SimpleGraph& graph, DpOptions options) {
  return compute_sa_table(graph, options).sa();
}

std::vector<BigInt> a_vector(const SimpleGraph& graph, DpOptions options) {
  return compute_sa_table(graph, options).a_vector();
}

BigInt b_total(const SimpleGraph& graph, DpOptions options) {
  return compute_sa_table(graph, options).b_total();
}

std::vector<BigInt> a_vector_by_convolution(std::span<const ANumberTable> components) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& table : components) out = convolve(out, table.a_vector());
  return out;
}

std::vector<VertexSubset> sign_law_violations(const ANumberTable& table) {
  std::vector<VertexSubset> out;
  auto values = table.sa_by_subset();
  for (std::uint64_t bits = 0; bits < values.size(); ++bits) {
    const int size = std::popcount(bits);
    if (size % 2 != 0 || values[bits] == 0) continue;
    const int expected = (size / 2) % 2 == 0 ? 1 : -1;
    if (sgn(values[bits]) != expected) out.push_back(VertexSubset::from_bits(bits));
  }
  return out;
}

}  // namespace anumber
