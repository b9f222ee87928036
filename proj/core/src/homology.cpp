#include "anumber/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "anumber/bigint.hpp"
#include "anumber/error.hpp"

namespace anumber {

BoundaryMatrix boundary_matrix(const std::vector<std::vector<Face>>& faces, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= faces.size()) {
    throw std::out_of_range("boundary degree " + std::to_string(k) + " out of range");
  }
  const auto& targets = faces[static_cast<std::size_t>(k)];
  const auto& sources = faces[static_cast<std::size_t>(k) + 1];
  BoundaryMatrix out;
  out.degree = k;
  out.rows = targets.size();
  out.cols = sources.size();
  out.columns.resize(sources.size());
  for (std::size_t j = 0; j < sources.size(); ++j) {
    const Face& face = sources[j];
    auto& column = out.columns[j];
    Face facet_of(face.size() - 1);
    for (std::size_t p = 0; p < face.size(); ++p) {
      std::copy(face.begin(), face.begin() + static_cast<std::ptrdiff_t>(p), facet_of.begin());
      std::copy(face.begin() + static_cast<std::ptrdiff_t>(p) + 1, face.end(),
                facet_of.begin() + static_cast<std::ptrdiff_t>(p));
      auto it = std::lower_bound(targets.begin(), targets.end(), facet_of);
      if (it == targets.end() || *it != facet_of) {
        throw std::logic_error("face list is not closed under taking faces");
      }
      column.emplace_back(static_cast<std::size_t>(it - targets.begin()), p % 2 == 0 ? 1 : -1);
    }
    std::sort(column.begin(), column.end());
  }
  return out;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper) {
  if (lower.cols != upper.rows) return false;
  std::vector<std::int64_t> acc(lower.rows, 0);
  for (const auto& column : upper.columns) {
    std::fill(acc.begin(), acc.end(), 0);
    for (auto [mid, coef] : column) {
      for (auto [row, inner] : lower.columns[mid]) acc[row] += static_cast<std::int64_t>(coef) * inner;
    }
    if (std::any_of(acc.begin(), acc.end(), [](auto v) { return v != 0; })) return false;
  }
  return true;
}

namespace {

struct Overflow {};

struct CheckedInt64 {
  using value_type = std::int64_t;
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r) || r == std::numeric_limits<value_type>::min()) {
      throw Overflow{};
    }
    return r;
  }
  static value_type gcd(value_type a, value_type b) { return std::gcd(a, b); }
  static value_type div(value_type a, value_type b) { return a / b; }
};

struct Arbitrary {
  using value_type = BigInt;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) {
    value_type r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
};

// Column reduction keyed on the lowest nonzero row. Each elimination step
// replaces c by (pivot * c - entry * r), which stays in the integers and
// preserves the Q-span; dividing out the content bounds entry growth.
template <typename Ops>
std::size_t reduce_rank(const BoundaryMatrix& matrix) {
  using Int = typename Ops::value_type;
  using Column = std::vector<std::pair<std::size_t, Int>>;
  std::vector<Column> reduced;
  std::vector<std::ptrdiff_t> pivot_of_row(matrix.rows, -1);
  Column scratch;

  for (const auto& source : matrix.columns) {
    Column col;
    col.reserve(source.size());
    for (auto [row, coef] : source) col.emplace_back(row, Int(coef));
    while (!col.empty()) {
      const std::size_t low = col.back().first;
      const auto owner = pivot_of_row[low];
      if (owner < 0) break;
      const Column& other = reduced[static_cast<std::size_t>(owner)];
      const Int a = col.back().second;
      const Int b = other.back().second;
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          scratch.emplace_back(col[i].first, Ops::mul(b, col[i].second));
          ++i;
        } else if (i == col.size() || other[j].first < col[i].first) {
          scratch.emplace_back(other[j].first, Ops::sub(Int(0), Ops::mul(a, other[j].second)));
          ++j;
        } else {
          Int v = Ops::sub(Ops::mul(b, col[i].second), Ops::mul(a, other[j].second));
          if (v != 0) scratch.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Int content = 0;
      for (const auto& entry : scratch) content = Ops::gcd(content, entry.second);
      if (content > 1) {
        for (auto& entry : scratch) entry.second = Ops::div(entry.second, content);
      }
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = static_cast<std::ptrdiff_t>(reduced.size());
      reduced.push_back(std::move(col));
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t rank(const BoundaryMatrix& matrix) {
  try {
    return reduce_rank<CheckedInt64>(matrix);
  } catch (const Overflow&) {
    return reduce_rank<Arbitrary>(matrix);
  }
}

BettiVector::BettiVector(std::vector<std::int64_t> reduced_ranks) : ranks_(std::move(reduced_ranks)) {
  if (ranks_.empty()) ranks_.push_back(0);
}

std::int64_t BettiVector::at(int degree) const {
  const auto index = static_cast<std::ptrdiff_t>(degree) + 1;
  if (index < 0 || index >= static_cast<std::ptrdiff_t>(ranks_.size())) return 0;
  return ranks_[static_cast<std::size_t>(index)];
}

bool BettiVector::concentrated_in(int degree) const {
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] != 0 && static_cast<int>(i) - 1 != degree) return false;
  }
  return true;
}

bool BettiVector::is_acyclic() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](auto r) { return r == 0; });
}

std::vector<std::int64_t> BettiVector::unreduced() const {
  if (ranks_.size() <= 1) return {};
  std::vector<std::int64_t> out(ranks_.begin() + 1, ranks_.end());
  if (ranks_[0] == 0) out[0] += 1;
  return out;
}

bool BettiVector::operator==(const BettiVector& other) const {
  const auto n = std::max(ranks_.size(), other.ranks_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (at(static_cast<int>(i) - 1) != other.at(static_cast<int>(i) - 1)) return false;
  }
  return true;
}

BettiVector reduced_betti(const SimplicialComplex& complex, HomologyOptions options) {
  const auto faces = faces_by_dimension(complex, options.max_faces);
  // faces[d + 1] holds the d-faces; boundary_ranks[d + 1] = rank of d_d.
  const std::size_t levels = faces.size();
  std::vector<std::int64_t> boundary_ranks(levels + 1, 0);
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    boundary_ranks[k + 1] = static_cast<std::int64_t>(rank(boundary_matrix(faces, static_cast<int>(k))));
  }
  std::vector<std::int64_t> out(levels, 0);
  for (std::size_t idx = 0; idx < levels; ++idx) {
    out[idx] = static_cast<std::int64_t>(faces[idx].size()) - boundary_ranks[idx] -
               boundary_ranks[idx + 1];
  }
  return BettiVector(std::move(out));
}

std::int64_t euler_char(const SimplicialComplex& complex) {
  const auto f = f_vector(complex);
  std::int64_t chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * f[i];
  return chi;
}

}  // namespace anumber
