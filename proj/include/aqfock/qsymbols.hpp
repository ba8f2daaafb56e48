#pragma once

// q-numbers, q-factorials and q-Pochhammer symbols.

namespace aqfock::orthopoly {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
double q_number(int n, double q);

/// [x]_q = (1 - q^x)/(1 - q) for real x, continuous at q = 1 (value x).
double q_number_real(double x, double q);

/// [n]_q! = [1]_q ... [n]_q; [0]_q! = 1.
double q_factorial(int n, double q);

/// (s;q)_n = prod_{k=1}^{n} (1 - s q^{k-1}); (s;q)_0 = 1.
double q_pochhammer(double s, double q, int n);

/// (s;q)_inf, truncated once |s| |q|^k < 1e-16. Requires |q| < 1.
double q_pochhammer_inf(double s, double q);

}  // namespace aqfock::orthopoly
