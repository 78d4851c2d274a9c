#ifndef FLATPART_BIGINT_HPP
#define FLATPART_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace flatpart {

// All counting is exact; cpp_int never overflows.
using BigInt = boost::multiprecision::cpp_int;

} // namespace flatpart

#endif
