#pragma once

#include <bit>
#include <compare>
#include <functional>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

#include "anumber/error.hpp"

namespace anumber {

/// A set of vertices {0..62} packed into one machine word.
class VertexSubset {
 public:
  static constexpr int kMaxVertices = 63;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSubset() = default;

  static VertexSubset from_bits(std::uint64_t bits) {
    if (bits >> kMaxVertices) {
      throw UnsupportedInstance("vertex subsets are limited to vertices 0..62");
    }
    return VertexSubset(bits);
  }
  static VertexSubset full(int n) {
    check_vertex_count(n);
    return VertexSubset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }
  static VertexSubset singleton(int v) {
    check_vertex(v);
    return VertexSubset(std::uint64_t{1} << v);
  }
  static VertexSubset of(std::initializer_list<int> vertices) {
    VertexSubset s;
    for (int v : vertices) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U);
  }
  /// Smallest element; -1 when empty.
  constexpr int min() const { return bits_ ? std::countr_zero(bits_) : -1; }
  constexpr int max() const { return bits_ ? 63 - std::countl_zero(bits_) : -1; }

  VertexSubset with(int v) const {
    check_vertex(v);
    return VertexSubset(bits_ | (std::uint64_t{1} << v));
  }
  VertexSubset without(int v) const {
    check_vertex(v);
    return VertexSubset(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr bool is_subset_of(VertexSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSubset other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ | b.bits_);
  }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ & b.bits_);
  }
  friend constexpr VertexSubset operator^(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ ^ b.bits_);
  }
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSubset, VertexSubset) = default;

  /// Raw bit order, used for hashing and maps.
  friend constexpr std::strong_ordering operator<=>(VertexSubset a, VertexSubset b) {
    return a.bits_ <=> b.bits_;
  }

  /// "{0,2,3}"
  std::string to_string() const;

 private:
  constexpr explicit VertexSubset(std::uint64_t bits) : bits_(bits) {}

  static void check_vertex(int v) {
    if (v < 0 || v >= kMaxVertices) {
      throw UnsupportedInstance("vertex index " + std::to_string(v) + " outside 0..62");
    }
  }
  static void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw UnsupportedInstance("vertex count " + std::to_string(n) + " outside 0..63");
    }
  }

  std::uint64_t bits_ = 0;
};

/// Canonical label order used for building-set elements and complex vertices:
/// by cardinality, then by numeric bit value.
struct CanonicalOrder {
  constexpr bool operator()(VertexSubset a, VertexSubset b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace anumber

template <>
struct std::hash<anumber::VertexSubset> {
  std::size_t operator()(anumber::VertexSubset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
