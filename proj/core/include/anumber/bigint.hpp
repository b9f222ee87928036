#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace anumber {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(10); }

/// Parses a full decimal string; throws MalformedInput otherwise.
BigInt parse_bigint(const std::string& text);

/// result[i] = sum_{j+k=i} a[j] * b[k].
std::vector<BigInt> convolve(std::span<const BigInt> a, std::span<const BigInt> b);

}  // namespace anumber
