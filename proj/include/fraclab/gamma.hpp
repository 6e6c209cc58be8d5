#pragma once

namespace fraclab::special {

// Every gamma evaluation in the library goes through these three functions
// so the approximation can be audited in one place. The implementation is
// the classic Lanczos approximation (g = 7, 9 terms) with reflection for
// arguments left of 1/2.

// Gamma(x). Nonpositive integers yield +/-infinity via the reflection pole.
double gamma_fn(double x);

// log|Gamma(x)| for x > 0. Does not overflow until x ~ 2.5e305.
double log_gamma(double x);

// 1/Gamma(x) for any real x; exactly 0 at the poles x = 0, -1, -2, ...
double rgamma(double x);

// sin(pi*x) with argument reduction done on x, so it vanishes exactly at
// every integer.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace fraclab::special
