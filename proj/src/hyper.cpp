// hyper.cpp -- pFq term recurrence and Levin-u unit-argument acceleration.

#include "mahlerlab/hyper.hpp"

#include <cmath>
#include <stdexcept>

#include "mahlerlab/errors.hpp"

namespace ml::hyper {

Rational HyperParams::sigma() const {
    Rational s(0);
    for (const auto& b : lower) s += b;
    for (const auto& a : upper) s -= a;
    s.canonicalize();
    return s;
}

void HyperParams::validate() const {
    for (const auto& b : lower)
        if (b.get_den() == 1 && b <= 0)
            throw std::domain_error("pfq: lower parameter is a non-positive integer");
}

namespace {

// rational part of term_{n+1}/term_n (argument excluded)
Rational ratio_at(const HyperParams& p, long n) {
    Rational r(1);
    for (const auto& a : p.upper) r *= a + n;
    for (const auto& b : p.lower) r /= b + n;
    r /= (n + 1);
    r.canonicalize();
    return r;
}

template <typename ArgMul>
Real pfq_sum(const HyperParams& params, double abs_x, ArgMul apply_x,
             const PrecisionContext& ctx) {
    params.validate();
    if (!(abs_x < 1.0)) throw std::domain_error("pfq: series route requires |x| < 1");
    const long wb = ctx.working_bits;
    Real acc = Real::of_long(1, wb);
    if (abs_x == 0.0) return acc;
    Real term = Real::of_long(1, wb);
    const long n_cap = 64 + static_cast<long>((wb + 16) / -std::log2(abs_x)) * 4;
    for (long n = 0;; ++n) {
        Rational r = ratio_at(params, n);
        term *= Real::of_rational(r, wb);
        apply_x(term);
        acc += term;
        // future ratios are bounded by rho = max(|x|, |x * r_n|) for the
        // parameter ranges used here (upper params below lower params)
        const double rho = std::max(abs_x, std::fabs(r.get_d()) * abs_x);
        if (rho < 1.0) {
            const double tail_log2 =
                static_cast<double>(term.exponent2()) + std::log2(rho / (1.0 - rho));
            if (tail_log2 < static_cast<double>(acc.exponent2()) - (wb + 8)) break;
        }
        if (n > n_cap) throw PrecisionUnreachable("pfq: series did not meet its tail bound");
    }
    acc.check_finite("pfq");
    return acc;
}

} // namespace

Real pfq(const HyperParams& params, const Rational& x, const PrecisionContext& ctx) {
    Real rx = Real::of_rational(x, ctx.working_bits);
    return pfq_sum(params, std::fabs(x.get_d()), [&](Real& t) { t *= rx; }, ctx);
}

Real pfq(const HyperParams& params, const Real& x, const PrecisionContext& ctx) {
    Real rx = x;
    return pfq_sum(params, std::fabs(x.to_double()), [&](Real& t) { t *= rx; }, ctx);
}

Real pfq_unit(const HyperParams& params, int x_sign, const PrecisionContext& ctx,
              int* achieved_digits) {
    params.validate();
    if (x_sign != 1 && x_sign != -1) throw std::domain_error("pfq_unit: x must be +1 or -1");
    if (!(params.sigma() > 0))
        throw std::domain_error("pfq_unit: needs convergence exponent sigma > 0");

    // internal precision: twice the requested working precision plus room
    // for the binomial cancellation of the transform triangle
    const long wb = 2 * ctx.working_bits + 192;
    const int order_cap = 40;
    const long n_terms = order_cap + 24;

    // terms and partial sums
    std::vector<Real> s, omega;
    s.reserve(n_terms);
    omega.reserve(n_terms);
    Real term = Real::of_long(1, wb);
    Real acc(wb);
    for (long n = 0; n < n_terms; ++n) {
        acc += term;
        s.push_back(acc);
        omega.push_back(term * (n + 1));  // u-variant remainder estimate (beta = 1)
        Rational r = ratio_at(params, n);
        if (x_sign < 0) r = -r;
        term *= Real::of_rational(r, wb);
    }

    // Levin transform at offset 0: order-k value uses s_0..s_k.  Successive
    // orders can agree far more tightly than their distance to the limit, so
    // the accuracy estimate is the spread over a window of recent orders.
    const int window = 6;
    std::vector<Real> recent;
    Real best(wb);
    double best_est = 1e300;
    double best_cond = 0;
    const double scale = std::max(1.0, std::fabs(s.back().to_double()));
    for (int k = 2; k <= order_cap; ++k) {
        Real num(wb), den(wb);
        long w_exp_max = -1000000000L;  // largest summand, for the
                                        // cancellation condition of the sums
        Integer binom(1);               // C(k,j)
        for (int j = 0; j <= k; ++j) {
            // weight (-1)^j C(k,j) ((1+j)/(1+k))^(k-1) / omega_j
            Real w = Real::of_integer(binom, wb);
            Real frac = Real::of_rational(Rational(1 + j, 1 + k), wb);
            w *= pow_ui(frac, static_cast<unsigned long>(k - 1));
            if (j % 2 == 1) w = -w;
            w /= omega[static_cast<size_t>(j)];
            w_exp_max = std::max(w_exp_max, abs(w * s[static_cast<size_t>(j)]).exponent2());
            num += w * s[static_cast<size_t>(j)];
            den += w;
            binom *= (k - j);
            binom /= (j + 1);
        }
        if (den.is_zero()) continue;
        Real v = num / den;
        if (static_cast<int>(recent.size()) >= window - 1) {
            double est = 0;
            for (const auto& r : recent) est = std::max(est, std::fabs((v - r).to_double()));
            if (est < best_est) {
                best_est = est;
                best = v;
                best_cond = static_cast<double>(w_exp_max - num.exponent2());
            }
        }
        recent.push_back(v);
        if (static_cast<int>(recent.size()) > window - 1) recent.erase(recent.begin());
    }

    // accuracy: transform spread, capped by the cancellation headroom of the
    // weighted sums and by the output rounding to ctx.working_bits
    const double lost = std::max(0.0, best_cond) * 0.30102999566398 + 4.0;
    const double floor_digits = static_cast<double>(wb) * 0.30102999566398 - lost;
    const double out_digits = static_cast<double>(ctx.working_bits) * 0.30102999566398 - 1.0;
    const double rel = best_est / scale;
    int achieved = rel > 0 ? static_cast<int>(-std::log10(rel)) : ctx.target_digits + 16;
    if (achieved > static_cast<int>(floor_digits)) achieved = static_cast<int>(floor_digits);
    if (achieved > static_cast<int>(out_digits)) achieved = static_cast<int>(out_digits);
    if (achieved_digits) *achieved_digits = achieved;
    if (achieved < ctx.target_digits)
        throw AccelerationStagnation("pfq_unit: transform stalled at ~" +
                                     std::to_string(achieved) + " digits (target " +
                                     std::to_string(ctx.target_digits) + ")");
    // round to the caller's working precision
    Real out(ctx.working_bits);
    mpfr_set(out.raw(), best.raw(), MPFR_RNDN);
    out.check_finite("pfq_unit");
    return out;
}

} // namespace ml::hyper
