#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace balcube {

// All counts are exact; no floating point anywhere in the engines.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace balcube
