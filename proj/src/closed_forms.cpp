#include "balcube/closed_forms.hpp"

#include <stdexcept>

namespace balcube {

Int factorial(int n) {
  if (n < 0)
    throw std::domain_error("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw std::domain_error("binomial with negative argument");
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i; // exact at every step
  }
  return r;
}

Int b_n2(int n) {
  if (n < 1)
    throw std::domain_error("b_n2 requires n >= 1");
  return Int(1) << (n - 1);
}

Int b_n4(int n) {
  if (n < 2)
    throw std::domain_error("b_n4 requires n >= 2");
  Int numer = pow(Int(24), n - 1) - (Int(1) << (3 * n - 3));
  Int denom = pow(Int(4), n);
  Int q = numer / denom;
  if (q * denom != numer)
    throw std::logic_error("b_n4: quotient not exact at n=" +
                           std::to_string(n));
  return q;
}

CFactor c_factor_from_count(int n, int k, const Int& b_n2k) {
  if (k < 1)
    throw std::domain_error("c_factor requires k >= 1");
  if (Int(2) * k > (Int(1) << n))
    throw std::domain_error("c_factor requires 2k <= 2^n");
  Int m = factorial(2 * k) * b_n2k;
  Int total = pow(binomial(2 * k, k), n);
  Int l = total - m;
  CFactor out;
  out.n = n;
  out.k = k;
  out.l_value = l;
  out.value = Rat(l * (Int(1) << n), Int(k) * k * total);
  return out;
}

std::string decimal_string(const Rat& r, int digits) {
  Int num = numerator(r);
  Int den = denominator(r);
  bool neg = num < 0;
  if (neg)
    num = -num;
  Int scale = pow(Int(10), digits);
  Int scaled = (num * scale * 2 + den) / (den * 2); // round half away from 0
  Int ip = scaled / scale;
  Int fp = scaled % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  return (neg && scaled != 0 ? "-" : "") + ip.str() + "." + frac;
}

} // namespace balcube
