// mahler.hpp
//
// The three-variable Mahler measure families
//
//   f2(k) = 2 m((x+1/x)(y+1/y)(z+1/z) + k^(1/2))
//   f3(k) =   m((x+1/x)^2 (y+1/y)^2 (1+z)^3 z^-2 - k)
//   f4(k) = 4 m(x^4+y^4+z^4+1 + k^(1/4) xyz)
//
// through three independent routes:
//   hyper     f2(k) = Re(log k - (8/k)  5F4(3/2,3/2,3/2,1,1;2,2,2,2;64/k)),
//             f3: 12/k and 108/k, f4: 24/k and 256/k (valid for
//             |k| >= 64 / 128 / 256)
//   gseries   f2(s2(q)) = (-G(q) + 4G(q^4))/15,
//             f3(s3(q)) = (-G(q) + 3G(q^3))/8,
//             f4(s4(q)) = (-G(q) + 2G(q^2))/3
//   integral  quasi-Monte Carlo average of log|P| on the torus
//
// plus the 13-term family m(Q_(z-4)) = -(1/15) f3((16-z)^3/z^2)
//                                      + (8/15) f3(-(4-z)^3/z).
// This module sees only qseries + hyper (never the L-series side).

#ifndef MAHLERLAB_MAHLER_HPP
#define MAHLERLAB_MAHLER_HPP

#include <optional>
#include <string>

#include "mahlerlab/hyper.hpp"
#include "mahlerlab/precision.hpp"
#include "mahlerlab/qseries.hpp"

namespace ml::mahler {

enum class Family { F2 = 2, F3 = 3, F4 = 4 };

struct MeasureResult {
    Real value;
    std::string route;
    Real error_estimate;              // absolute
    std::optional<Real> s_of_q;       // gseries route reports s_level(q)
};

// hypergeometric parameter set of a family
hyper::HyperParams family_params(Family f);

// hypergeometric route; |k| >= 64 / 128 / 256 per family
MeasureResult f_hyper(Family f, const Rational& k, const PrecisionContext& ctx);

// G-series route at a positive real nome within the admissible strip
MeasureResult f_gseries(Family f, const qseries::Nome& q, const PrecisionContext& ctx);

// best-available route for a real k: G-series for k >= s-boundary
// (64 / 108 / 256), hypergeometric for |k| past its threshold; when both
// apply the two results are cross-checked before returning
MeasureResult f_at_k(Family f, const Rational& k, const PrecisionContext& ctx);

// m(Q_(z-4)) by the two-argument f3 composition; f3(0) = 0 is special-cased
MeasureResult qk_mahler(const Rational& z, const PrecisionContext& ctx);

// quasi-Monte Carlo torus integration
struct IntegralSpec {
    enum class Kind { F2, F3, F4, Qk, Smyth } kind = Kind::Smyth;
    double k = 0;        // family parameter (ignored for Smyth)
    int root_sign = +1;  // which square root of k feeds f2 (and f4's real root)
};

// median-of-means over 16 shifted rank-1 lattice batches; deterministic
// for fixed (samples, seed); the familywise prefactor (2, 1, 4) is applied
MeasureResult mahler_integral(const IntegralSpec& spec, long samples, unsigned long seed);

} // namespace ml::mahler

#endif
