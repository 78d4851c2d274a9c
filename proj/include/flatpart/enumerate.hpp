#ifndef FLATPART_ENUMERATE_HPP
#define FLATPART_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "flatpart/bigint.hpp"
#include "flatpart/types.hpp"

namespace flatpart {

/// Single-owner stream over all partitions of [n] in standard increasing
/// form, driven by restricted growth functions. Yields exactly Bell(n)
/// partitions, no duplicates.
class PartitionEnumerator {
public:
  explicit PartitionEnumerator(int n); // throws DomainError for n < 1

  std::optional<SetPartition> next();

private:
  int n_;
  bool exhausted_ = false;
  bool started_ = false;
  std::vector<int> rgf_;
  std::vector<int> prefix_max_;

  bool advance();
};

/// Visit every partition of [n] once.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn);

/// Concatenate the blocks, erasing the dividers.
Permutation flatten(const SetPartition& p);

/// True iff w has a subsequence order-isomorphic to pat. Length-3 patterns
/// use dedicated linear scans; other lengths fall back to a backtracking
/// matcher (intended for pattern length <= 4).
bool contains_pattern(const Permutation& w, const Permutation& pat);

/// |{partitions of [n] whose flattening avoids pat}| by exhaustive
/// enumeration. jobs > 1 splits the RGF space by prefix and counts
/// sub-ranges on separate threads; the result is independent of the split.
BigInt count_avoiders(int n, const Permutation& pat, unsigned jobs = 1);

/// Entry values of w that are smaller than their predecessor, plus the first
/// entry by convention. Sorted.
std::vector<int> descent_terminators(const Permutation& w);

/// Entry values smaller than everything after them. Sorted.
std::vector<int> rl_minima(const Permutation& w);

/// First entries of the blocks. Sorted.
std::vector<int> block_initiators(const SetPartition& p);

/// M(p): right-to-left minima of flatten(p) that are not descent
/// terminators. Sorted.
std::vector<int> statistic_m(const SetPartition& p);

enum class Refinement {
  MSize,            // |M(p)| == k
  FirstBlockLength, // first block of p has length k
};

/// Exhaustive count of pat-avoiders of [n] whose statistic equals k.
BigInt count_refined(int n, int k, const Permutation& pat, Refinement stat);

} // namespace flatpart

#endif
