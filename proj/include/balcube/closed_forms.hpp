#pragma once

#include <string>

#include "balcube/bigint.hpp"

namespace balcube {

Int factorial(int n);
Int binomial(int n, int k);

// B_{n,2} = 2^{n-1}, n >= 1.
Int b_n2(int n);

// B_{n,4} = ((4!)^{n-1} - 2^{3n-3}) / 4^n, n >= 2.
// The quotient must be exact; a remainder signals a transcription error.
Int b_n4(int n);

// Exact correction factor: M_{n,2k} = C(2k,k)^n (1 - c_{n,k} k^2 / 2^n).
// l_value is the collision count L_{n,2k} = C(2k,k)^n - M_{n,2k}.
struct CFactor {
  int n = 0;
  int k = 0;
  Rat value;
  Int l_value;
};

CFactor c_factor_from_count(int n, int k, const Int& b_n2k);

// Fixed-precision decimal rendering of a rational (round half away from 0).
std::string decimal_string(const Rat& r, int digits);

} // namespace balcube
