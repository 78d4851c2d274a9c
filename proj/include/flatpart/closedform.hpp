#ifndef FLATPART_CLOSEDFORM_HPP
#define FLATPART_CLOSEDFORM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "flatpart/bigint.hpp"
#include "flatpart/types.hpp"

namespace flatpart {

enum class Pattern { P123, P132, P213, P231, P312, P321 };

Pattern pattern_from_string(std::string_view s); // "231" etc., throws ParseError
std::string pattern_to_string(Pattern pat);
Permutation pattern_word(Pattern pat);

/// Closed-form |U(n; pat)|:
///   123 -> 1, 2, 1, 0, 0, ...      132 -> 2^(n-1)
///   213, 312 -> F_{2n-1}           231 -> C_n
///   321 -> sum_{k=0}^{n-1} binom(n-1,k) C_k
BigInt count_formula(int n, Pattern pat);

/// Refined |U(n, k; pat)| for pat in {231, 321}:
///   231 -> binom(n-1,k) 2^k C_{(n-1-k)/2}   (0 at non-integer index)
///   321 -> binom(n-1,k) 2^k R_{n-1-k}
BigInt refined_formula(int n, int k, Pattern pat);

/// The 213/312 first-block recurrence u(n,n) = 1, u(n,k) = k u(n-k),
/// u(n) = sum_k u(n,k), solved exactly for 1 <= k <= n <= n_max.
class UTable {
public:
  explicit UTable(int n_max);

  int n_max() const { return n_max_; }
  const BigInt& at(int n, int k) const; // u(n, k), 1 <= k <= n
  const BigInt& row_sum(int n) const;   // u(n)

private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> sums_;
};

UTable u_system(int n_max);

/// Touchard's identity C_n = sum_{k>=0} binom(n-1,2k) 2^{n-1-2k} C_k,
/// checked exactly at n.
bool verify_touchard(int n);

/// sum_k binom(n,k) 2^k R_{n-k} == sum_k binom(n,k) C_k, checked exactly.
bool verify_identity5(int n);

/// 132-avoidance holds iff flatten(p) is the identity permutation.
bool characterize_132(const SetPartition& p);

/// 213-avoidance via the first-block shape: first block = I union J with I a
/// nonempty initial segment of [n] and J a terminal segment disjoint from I;
/// remaining blocks standardized recursively.
bool characterize_213(const SetPartition& p);

/// 312-avoidance via the first-block shape: first block = [n], or an initial
/// segment I of length >= 2 with one element a >= 2 removed; remaining
/// blocks standardized recursively.
bool characterize_312(const SetPartition& p);

} // namespace flatpart

#endif
