#ifndef FLATPART_BIJECT_HPP
#define FLATPART_BIJECT_HPP

#include <cstddef>

#include "flatpart/closedform.hpp"
#include "flatpart/types.hpp"

namespace flatpart {

/// c_i = number of steps preceding the (i+1)st upstep, i = 1..r-1.
CSeq dyck_to_cseq(const DyckPath& d); // requires semilength >= 1

/// Inverse of dyck_to_cseq.
DyckPath cseq_to_dyck(const CSeq& c);

/// 1-based position of the matching downstep of the upstep at `upstep_pos`
/// (1-based): the terminal downstep of the shortest Dyck subpath starting
/// there. Throws if the position is not an upstep.
std::size_t matching_downstep(const DyckPath& d, std::size_t upstep_pos);

/// The fill-in construction: a_1 = 1, a_2 = 2, a_{i+2} = c_i + 2, and the
/// b squares filled right to left with the smallest unused element of
/// B = [2r+1] \ {a_i} exceeding a_{i+1}. Lands in U(2r+1, 0; 231).
SetPartition cseq_to_partition(const CSeq& c);

/// The Dyck-path reading of the same map: prepend an upstep to the path of
/// c, number all 2r+1 steps, take the a_i as upstep labels and b_i as the
/// label on the matching downstep of the next upstep after a_i. Agrees with
/// cseq_to_partition everywhere.
SetPartition cseq_to_partition_dyck_reading(const CSeq& c);

/// Inverse of cseq_to_partition: c_i = a_{i+2} - 2. Requires p in
/// U(2r+1, 0; 231); errors name the violated clause.
CSeq partition_to_cseq(const SetPartition& p);

/// True iff p avoids pat and M(p) is empty.
bool is_zero_class(const SetPartition& p, Pattern pat);

/// (K, L, inner) with K = M(p), L = K intersect {block initiators}, and
/// inner the standardization of p with K deleted (a block emptied or
/// beheaded by an L-element merges into its predecessor). Defined for
/// pat in {231, 321}; requires p to avoid pat.
KLTriple decompose_kl(const SetPartition& p, Pattern pat);

/// Inverse of decompose_kl: insert K smallest to largest (locate the last
/// block whose first entry is < a, relabel entries >= a up by one, insert),
/// then start a new block at each element of L.
SetPartition compose_kl(const KLTriple& t, Pattern pat);

/// Bijection from U(n, 0; 321) onto Dyck (n-1)-paths with no short descent
/// (no maximal downstep run of length 1). Reading off the blocks
/// B_1..B_m with initiators a_1..a_m: descent lengths are the non-last
/// block lengths in reverse, ascent prefix sums are n+1-a_m, n+1-a_{m-1},
/// ..., n+1-a_2.
DyckPath u321zero_to_dyck(const SetPartition& p);

/// Inverse of u321zero_to_dyck; requires a path with no short descent.
/// A path of semilength r maps to a partition of [r+1].
SetPartition dyck_to_u321zero(const DyckPath& d);

} // namespace flatpart

#endif
