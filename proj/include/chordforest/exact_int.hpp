#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordforest {

/// Arbitrary-precision signed integer used for every count.
using ExactInt = boost::multiprecision::cpp_int;

/// Exact quotient of `numerator / denominator`; throws InconsistencyError
/// naming `what` when the remainder is non-zero or the denominator is zero.
ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator,
                      const char* what);

/// Plain decimal rendering, no exponent, sign only when negative.
inline std::string to_decimal(const ExactInt& value) { return value.str(); }

}  // namespace chordforest
