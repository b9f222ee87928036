#pragma once

#include <vector>

#include "anumber/bigint.hpp"
#include "anumber/graph.hpp"

namespace anumber {

/// binom(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// C_k = binom(2k, k) / (k + 1).
BigInt catalan(long k);

/// binom(n, i) - binom(n, i - 1) for 0 <= i <= floor(n/2); DomainError otherwise.
BigInt catalan_triangle(long n, long i);

/// Euler zigzag numbers A_0..A_max_k from the Seidel-Entringer boustrophedon.
std::vector<BigInt> zigzag_table(long max_k);
BigInt zigzag(long k);

/// a_i of the n-vertex family member (star: n is the total vertex count of
/// K_{1,n-1}). DomainError unless 0 <= i <= floor(n/2).
BigInt closed_form_a(GraphFamily family, long n, long i);
std::vector<BigInt> closed_form_a_vector(GraphFamily family, long n);

/// Signed a-number of the whole n-vertex family member.
BigInt closed_form_sa(GraphFamily family, long n);

/// Total a-number b of the n-vertex family member; zero for even n >= 2.
BigInt closed_form_b(GraphFamily family, long n);

}  // namespace anumber
