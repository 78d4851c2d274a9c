#ifndef FLATPART_TEXTIO_HPP
#define FLATPART_TEXTIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "flatpart/types.hpp"

namespace flatpart {

// Partition grammar: blocks separated by "/", entries by ",", e.g.
// "1,3,6/2,7,9/4/5,8". The compact digit form "136-279-4-58" is accepted on
// input for n <= 9 only (ambiguous beyond single digits); output always uses
// the "/" grammar.

std::string format_partition(const SetPartition& p);
SetPartition parse_partition(std::string_view s);

std::string format_permutation(const Permutation& w); // "1,3,2"
Permutation parse_permutation(std::string_view s);    // "1,3,2" or "132"

std::string format_dyck(const DyckPath& d); // "UUDD"; empty path -> ""
DyckPath parse_dyck(std::string_view s);

std::string format_cseq(const CSeq& c); // "1,2,4"; r = 1 -> ""
CSeq parse_cseq(std::string_view s);

std::string format_entry_set(const std::vector<int>& s); // "{2,6,8}"

std::string format_kl(const KLTriple& t); // "K={2,6,8} L={2} inner=1,3/2,5/4"
KLTriple parse_kl(std::string_view s);

} // namespace flatpart

#endif
