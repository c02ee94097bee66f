#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cjones {

// All coefficient arithmetic in this library is exact. Products of quantum
// factorials overflow 64-bit integers long before the sizes the test suites
// reach, so an arbitrary-precision integer is the only coefficient type.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt parse_bigint(const std::string& text) { return BigInt(text); }

}  // namespace cjones
