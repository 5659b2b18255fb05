#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace migraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Natural log of a positive BigInt, accurate to ~1e-15 relative.
double log_of(const BigInt& x);

}  // namespace migraph
