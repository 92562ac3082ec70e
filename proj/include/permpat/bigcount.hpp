#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace permpat {

// Exact non-negative integer for cardinalities and formula values.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace permpat
