#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace altgraph {

// Exact nonnegative counts; no floating point anywhere in counting
// paths.
using BigCount = boost::multiprecision::cpp_int;

// n! with a process-wide memo table.
const BigCount& big_factorial(unsigned n);

// Throws std::logic_error when the division is inexact; `what` names
// the quantity being computed.
BigCount exact_div(const BigCount& numerator, const BigCount& denominator,
                   const char* what);

inline std::string to_decimal(const BigCount& v) { return v.str(); }

}  // namespace altgraph
