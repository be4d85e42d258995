#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace stackpat {

// Exact arbitrary-precision integer used for all counts.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace stackpat
