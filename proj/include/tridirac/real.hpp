#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace tridirac {

/// 100-digit float for series sums and for forward recurrences whose wanted
/// solution is minimal.
using Real = boost::multiprecision::cpp_bin_float_100;

}  // namespace tridirac
