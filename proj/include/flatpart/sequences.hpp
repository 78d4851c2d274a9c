#ifndef FLATPART_SEQUENCES_HPP
#define FLATPART_SEQUENCES_HPP

#include "flatpart/bigint.hpp"

namespace flatpart {

/// Catalan number C_i. Throws DomainError for i < 0.
BigInt catalan(long long i);

/// Catalan at a half-integral index given as twice its value:
/// catalan_half(2m) == C_m and catalan_half(odd) == 0. The zero-at-
/// non-integers convention is first-class because the refined 231 count
/// evaluates C at (n-1-k)/2.
BigInt catalan_half(long long twice_index);

/// Fibonacci with F_{-1} = 1, F_0 = 0, F_1 = 1. Throws for i < -1.
BigInt fibonacci(long long i);

/// Riordan number R_m = sum_{j=0}^m (-1)^{m-j} binom(m,j) C_j.
BigInt riordan(long long m);

/// Binomial coefficient; 0 when k < 0 or k > n. Throws for n < 0.
BigInt binomial(long long n, long long k);

} // namespace flatpart

#endif
