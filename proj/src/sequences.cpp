#include "flatpart/sequences.hpp"

#include "flatpart/types.hpp"

namespace flatpart {

BigInt catalan(long long i) {
  if (i < 0)
    throw DomainError("Catalan index must be nonnegative");
  // C_{k+1} = C_k * 2(2k+1)/(k+2), exact at every step.
  BigInt c = 1;
  for (long long k = 0; k < i; ++k)
    c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

BigInt catalan_half(long long twice_index) {
  if (twice_index % 2 != 0)
    return 0;
  return catalan(twice_index / 2);
}

BigInt fibonacci(long long i) {
  if (i < -1)
    throw DomainError("Fibonacci index must be >= -1");
  BigInt prev = 1; // F_{-1}
  BigInt cur = 0;  // F_0
  if (i == -1)
    return prev;
  for (long long k = 0; k < i; ++k) {
    BigInt next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt riordan(long long m) {
  if (m < 0)
    throw DomainError("Riordan index must be nonnegative");
  BigInt sum = 0;
  BigInt c = 1; // C_0
  for (long long j = 0; j <= m; ++j) {
    const BigInt term = binomial(m, j) * c;
    sum += ((m - j) % 2 == 0) ? term : -term;
    c = c * 2 * (2 * j + 1) / (j + 2);
  }
  return sum;
}

BigInt binomial(long long n, long long k) {
  if (n < 0)
    throw DomainError("binomial requires n >= 0");
  if (k < 0 || k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i)
    result = result * (n - k + i) / i;
  return result;
}

} // namespace flatpart
