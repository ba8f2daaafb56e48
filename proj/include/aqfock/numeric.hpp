#pragma once

#include <complex>
#include <cstddef>

namespace aqfock {

using cplx = std::complex<double>;

/// Integer power by repeated multiplication with the convention 0^0 = 1.
/// Works for any ring-like scalar (double, complex, exact rationals).
template <typename T>
T ipow(const T& base, int exponent) {
  T result(1);
  T factor = base;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  while (e != 0) {
    if (e & 1U) result *= factor;
    e >>= 1U;
    if (e != 0) factor *= factor;
  }
  if (exponent < 0) return T(1) / result;
  return result;
}

/// d^n as a size.
inline std::size_t upow(std::size_t d, int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= d;
  return r;
}

}  // namespace aqfock
