#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posclass {

/// Arbitrary-precision signed integer used for all Schur coefficients.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace posclass
