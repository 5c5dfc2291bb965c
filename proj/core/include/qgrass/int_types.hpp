#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qgr {

// All arithmetic in this library is exact.  Int is an arbitrary-precision
// integer; Rat is used only inside linear solvers, with integrality
// certified separately.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace qgr
