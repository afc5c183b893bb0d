#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace treepoly {

// Exact coefficient types. cpp_int keeps small magnitudes inline, which is
// the common case here; nothing in the algebraic core ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace treepoly
