#ifndef FLATPART_TYPES_HPP
#define FLATPART_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatpart {

/// Thrown when a value violates a domain invariant. The message names the
/// violated clause.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed textual input; the message carries the position.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {1..n} in one-line notation.
struct Permutation {
  std::vector<int> word;

  static Permutation checked(std::vector<int> word);

  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const Permutation&) const = default;
};

/// A set partition of {1..n} in standard increasing form: entries increase
/// within each block and blocks are ordered by increasing first entry.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static SetPartition checked(int n, std::vector<std::vector<int>> blocks);

  /// Blocks induced by a restricted growth function w (w[0] == 1,
  /// w[i] <= 1 + max(w[0..i-1])); block j collects the positions i+1 with
  /// w[i] == j. The result is in standard increasing form by construction.
  static SetPartition from_rgf(const std::vector<int>& rgf);

  bool operator==(const SetPartition&) const = default;
};

/// Relabel the entries of `blocks` order-isomorphically onto {1..m}, keeping
/// the relative block order, and validate the result.
SetPartition standardize(const std::vector<std::vector<int>>& blocks);

enum class Step : unsigned char { Up, Down };

/// A Dyck path: every prefix has at least as many upsteps as downsteps and
/// the totals are equal. Semilength = number of upsteps.
struct DyckPath {
  std::vector<Step> steps;

  static DyckPath checked(std::vector<Step> steps);

  int semilength() const { return static_cast<int>(steps.size() / 2); }
  bool operator==(const DyckPath&) const = default;
};

/// The strictly increasing sequence c_1 < ... < c_{r-1} with c_i <= 2i that
/// encodes a Dyck r-path by the number of steps preceding each upstep after
/// the first.
struct CSeq {
  int r = 0;
  std::vector<int> values; // c_1..c_{r-1}

  static CSeq checked(int r, std::vector<int> values);

  bool operator==(const CSeq&) const = default;
};

/// The shape a_1 b_1 - a_2 b_2 - ... - a_r b_r - a_{r+1} of a zero-class
/// 231-avoider on [2r+1]: all non-last blocks are pairs, the last block is a
/// singleton, the a_i increase and a_i < b_i > a_{i+1}.
struct PairForm {
  int r = 0;
  std::vector<int> a; // a_1..a_{r+1}
  std::vector<int> b; // b_1..b_r

  /// Extract the pair form of a partition, or throw DomainError naming the
  /// violated clause (block length, last block not a singleton, ...).
  static PairForm of(const SetPartition& p);

  bool operator==(const PairForm&) const = default;
};

/// The decomposition (K, L, inner) of an avoider: K the statistic-M set,
/// L the members of K that initiate a block, inner the standardized result
/// of deleting K.
struct KLTriple {
  int n = 0;
  std::vector<int> k_set; // sorted, subset of {2..n}
  std::vector<int> l_set; // sorted, subset of k_set
  SetPartition inner;

  bool operator==(const KLTriple&) const = default;
};

} // namespace flatpart

#endif
