// hyper.hpp
//
// Generalized hypergeometric series sum (a1)_n...(ap)_n/((b1)_n...(bq)_n) x^n/n!
// with rational parameters.  Terms come from the exact rational ratio
// recurrence (no Gamma evaluations).  |x| < 1 sums with a certified
// geometric tail bound; |x| = 1 (convergence exponent sigma > 0) goes
// through a Levin u-transform and reports an achieved-digit estimate.

#ifndef MAHLERLAB_HYPER_HPP
#define MAHLERLAB_HYPER_HPP

#include <vector>

#include "mahlerlab/precision.hpp"

namespace ml::hyper {

struct HyperParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    // sum(lower) - sum(upper); terms at |x| = 1 decay like n^-(1+sigma)
    Rational sigma() const;
    void validate() const;  // no lower parameter may be a non-positive integer
};

// series value for |x| < 1 (exact rational argument)
Real pfq(const HyperParams& params, const Rational& x, const PrecisionContext& ctx);

// series value for |x| < 1 (real argument)
Real pfq(const HyperParams& params, const Real& x, const PrecisionContext& ctx);

// value at x = +1 or -1 via Levin-u acceleration; achieved_digits (when
// non-null) receives the spread-based accuracy estimate.  Throws
// AccelerationStagnation if the estimate never reaches ctx.target_digits.
Real pfq_unit(const HyperParams& params, int x_sign, const PrecisionContext& ctx,
              int* achieved_digits = nullptr);

} // namespace ml::hyper

#endif
