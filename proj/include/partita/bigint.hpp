#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partita {

/// Arbitrary-precision integer used for all counts and series coefficients.
using BigInt = boost::multiprecision::cpp_int;

} // namespace partita
