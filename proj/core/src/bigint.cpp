#include "anumber/bigint.hpp"

#include "anumber/error.hpp"

namespace anumber {

BigInt parse_bigint(const std::string& text) {
  BigInt value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw MalformedInput("not a decimal integer: '" + text + "'");
  }
  return value;
}

std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace anumber
