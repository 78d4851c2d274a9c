#include "flatpart/closedform.hpp"

#include <algorithm>

#include "flatpart/enumerate.hpp"
#include "flatpart/sequences.hpp"

namespace flatpart {

Pattern pattern_from_string(std::string_view s) {
  if (s == "123") return Pattern::P123;
  if (s == "132") return Pattern::P132;
  if (s == "213") return Pattern::P213;
  if (s == "231") return Pattern::P231;
  if (s == "312") return Pattern::P312;
  if (s == "321") return Pattern::P321;
  throw ParseError("unknown pattern \"" + std::string(s) + "\"");
}

std::string pattern_to_string(Pattern pat) {
  switch (pat) {
    case Pattern::P123: return "123";
    case Pattern::P132: return "132";
    case Pattern::P213: return "213";
    case Pattern::P231: return "231";
    case Pattern::P312: return "312";
    case Pattern::P321: return "321";
  }
  throw DomainError("invalid pattern value");
}

Permutation pattern_word(Pattern pat) {
  switch (pat) {
    case Pattern::P123: return Permutation{{1, 2, 3}};
    case Pattern::P132: return Permutation{{1, 3, 2}};
    case Pattern::P213: return Permutation{{2, 1, 3}};
    case Pattern::P231: return Permutation{{2, 3, 1}};
    case Pattern::P312: return Permutation{{3, 1, 2}};
    case Pattern::P321: return Permutation{{3, 2, 1}};
  }
  throw DomainError("invalid pattern value");
}

BigInt count_formula(int n, Pattern pat) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  switch (pat) {
    case Pattern::P123:
      // The counting sequence is 1, 2, 1, 0, 0, ... and has no closed form.
      if (n == 1) return 1;
      if (n == 2) return 2;
      if (n == 3) return 1;
      return 0;
    case Pattern::P132:
      return BigInt(1) << (n - 1);
    case Pattern::P213:
    case Pattern::P312:
      return fibonacci(2LL * n - 1);
    case Pattern::P231:
      return catalan(n);
    case Pattern::P321: {
      BigInt sum = 0;
      for (int k = 0; k <= n - 1; ++k)
        sum += binomial(n - 1, k) * catalan(k);
      return sum;
    }
  }
  throw DomainError("invalid pattern value");
}

BigInt refined_formula(int n, int k, Pattern pat) {
  if (n < 1)
    throw DomainError("ground set size must be positive");
  if (k < 0)
    throw DomainError("statistic value must be nonnegative");
  if (k > n - 1)
    return 0; // binomial vanishes
  switch (pat) {
    case Pattern::P231:
      return binomial(n - 1, k) * (BigInt(1) << k) * catalan_half(n - 1 - k);
    case Pattern::P321:
      return binomial(n - 1, k) * (BigInt(1) << k) * riordan(n - 1 - k);
    default:
      throw DomainError("refined formula is defined for patterns 231 and 321 only");
  }
}

UTable::UTable(int n_max) : n_max_(n_max) {
  if (n_max < 1)
    throw DomainError("table bound must be positive");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  sums_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    BigInt sum = 0;
    for (int k = 1; k < n; ++k) {
      row[static_cast<std::size_t>(k)] = k * sums_[static_cast<std::size_t>(n - k)];
      sum += row[static_cast<std::size_t>(k)];
    }
    row[static_cast<std::size_t>(n)] = 1;
    sum += 1;
    sums_[static_cast<std::size_t>(n)] = sum;
  }
}

const BigInt& UTable::at(int n, int k) const {
  if (n < 1 || n > n_max_ || k < 1 || k > n)
    throw DomainError("u(n,k) index out of range");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& UTable::row_sum(int n) const {
  if (n < 1 || n > n_max_)
    throw DomainError("u(n) index out of range");
  return sums_[static_cast<std::size_t>(n)];
}

UTable u_system(int n_max) { return UTable(n_max); }

bool verify_touchard(int n) {
  if (n < 1)
    throw DomainError("identity is stated for n >= 1");
  BigInt rhs = 0;
  for (int k = 0; 2 * k <= n - 1; ++k)
    rhs += binomial(n - 1, 2 * k) * (BigInt(1) << (n - 1 - 2 * k)) * catalan(k);
  return rhs == catalan(n);
}

bool verify_identity5(int n) {
  if (n < 0)
    throw DomainError("identity is stated for n >= 0");
  BigInt lhs = 0;
  BigInt rhs = 0;
  for (int k = 0; k <= n; ++k) {
    lhs += binomial(n, k) * (BigInt(1) << k) * riordan(n - k);
    rhs += binomial(n, k) * catalan(k);
  }
  return lhs == rhs;
}

bool characterize_132(const SetPartition& p) {
  const Permutation w = flatten(p);
  for (int i = 0; i < p.n; ++i)
    if (w.word[static_cast<std::size_t>(i)] != i + 1)
      return false;
  return true;
}

namespace {

SetPartition tail_standardized(const SetPartition& p) {
  const std::vector<std::vector<int>> rest(p.blocks.begin() + 1, p.blocks.end());
  return standardize(rest);
}

} // namespace

bool characterize_213(const SetPartition& p) {
  const std::vector<int>& first = p.blocks.front();
  // Split the first block into the initial-segment part I = {1..i} and the
  // remainder, which must be exactly a terminal segment {m..n}.
  std::size_t split = 0;
  while (split < first.size() && first[split] == static_cast<int>(split) + 1)
    ++split;
  if (split == 0)
    return false; // cannot happen in standard form; kept for clarity
  for (std::size_t j = split; j < first.size(); ++j)
    if (first[j] != p.n - static_cast<int>(first.size() - 1 - j))
      return false;
  if (p.blocks.size() == 1)
    return true;
  return characterize_213(tail_standardized(p));
}

bool characterize_312(const SetPartition& p) {
  const std::vector<int>& first = p.blocks.front();
  const int len = static_cast<int>(first.size());
  if (len == p.n)
    return true; // first block is all of [n]
  // Otherwise the block must be an initial segment of length len+1 with one
  // element a >= 2 removed, i.e. max <= len + 1 (2 is required to be in I).
  if (len < 1 || first.back() > len + 1)
    return false;
  return characterize_312(tail_standardized(p));
}

} // namespace flatpart
