// numkernel.hpp
//
// Arbitrary-precision special functions shared by every other module:
//   const_pi                 pi at working precision
//   upper_incomplete_gamma   Gamma(s,x) for integer s >= 0 (s=0 is E1)
//   hurwitz_zeta             zeta(s,a) for real s > 1, rational a in (0,1]
//   bernoulli_numbers        exact rational B_0..B_n  (B_1 = -1/2)
//
// All functions compute at ctx.working_bits and are pure; the Bernoulli
// cache fills under a lock and is read-only afterwards.

#ifndef MAHLERLAB_NUMKERNEL_HPP
#define MAHLERLAB_NUMKERNEL_HPP

#include <vector>

#include "mahlerlab/precision.hpp"

namespace ml::numkernel {

Real const_pi(const PrecisionContext& ctx);

// Gamma(s,x) = int_x^inf e^-u u^(s-1) du.  Integer s >= 0, x >= 0.
// s >= 1 uses the closed form (s-1)! e^-x sum_{j<s} x^j/j!.
// s == 0 is E1(x): alternating series for x <= 4, continued fraction above
// (the switch point is fixed at 4).
Real upper_incomplete_gamma(long s, const Real& x, const PrecisionContext& ctx);

// zeta(s,a) = sum_{n>=0} (n+a)^-s by Euler-Maclaurin with the remainder
// bounded by a multiple of the first omitted term.
Real hurwitz_zeta(const Real& s, const Rational& a, const PrecisionContext& ctx);

// B_0..B_n as exact rationals, cached (grow-only) after the first call.
std::vector<Rational> bernoulli_numbers(int n_max);

} // namespace ml::numkernel

#endif
