// numkernel.cpp -- pi, incomplete gamma / E1, Hurwitz zeta, Bernoulli numbers.

#include "mahlerlab/numkernel.hpp"

#include <mutex>
#include <stdexcept>

#include "mahlerlab/errors.hpp"

namespace ml::numkernel {

Real const_pi(const PrecisionContext& ctx) {
    Real r(ctx.working_bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

namespace {

// E1(x) = -gamma - log x + sum_{k>=1} (-1)^(k+1) x^k / (k k!),  x in (0,4]
Real e1_series(const Real& x, long wb) {
    Real acc(wb);  // accumulates sum_{k>=1} u_k / k with u_k = (-x)^k / k!
    Real u = Real::of_long(1, wb);
    Real negx = -x;
    for (long k = 1;; ++k) {
        u *= negx;
        u /= k;
        Real term = u / k;
        acc += term;
        if (term.exponent2() < -(wb + 8) + acc.exponent2()) break;
        if (k > 4 * wb) throw PrecisionUnreachable("e1_series: no convergence");
    }
    Real gamma(wb);
    mpfr_const_euler(gamma.raw(), MPFR_RNDN);
    return -gamma - log(x) - acc;
}

// E1(x) = e^-x / (x+1 - 1^2/(x+3 - 2^2/(x+5 - ...))),  x > 4, modified Lentz.
// The truncation error decays like exp(-4 sqrt(k x)), so just past the
// series/fraction seam the iteration count grows quadratically in the
// working precision; the cap follows that scaling.
Real e1_contfrac(const Real& x, long wb) {
    const Real tiny = mul_2si(Real::of_long(1, wb), -(wb * 4));
    Real b = x + 1;
    Real f = b;
    if (f.is_zero()) f = tiny;
    Real c = f;
    Real d(wb);  // 0
    const long cap = 64 + 2 * wb + (wb * wb) / 64;
    for (long k = 1; k <= cap; ++k) {
        Real a = Real::of_long(-k * k, wb);
        b = x + (2 * k + 1);
        d = b + a * d;
        if (d.is_zero()) d = tiny;
        c = b + a / c;
        if (c.is_zero()) c = tiny;
        d = 1 / d;
        Real delta = c * d;
        f *= delta;
        // |delta - 1| cannot round below the ulp scale of the working
        // precision, so the cutoff sits a few ulps above it
        if (abs(delta - 1).exponent2() < -(wb - 4)) return exp(-x) / f;
    }
    throw PrecisionUnreachable("e1_contfrac: no convergence");
}

} // namespace

Real upper_incomplete_gamma(long s, const Real& x, const PrecisionContext& ctx) {
    if (s < 0) throw std::domain_error("upper_incomplete_gamma: s must be >= 0");
    if (x.sign() < 0) throw std::domain_error("upper_incomplete_gamma: x must be >= 0");
    const long wb = ctx.working_bits;
    if (s == 0) {
        if (x.is_zero()) throw std::domain_error("upper_incomplete_gamma: E1(0) diverges");
        Real r = (x <= Real::of_long(4, wb)) ? e1_series(Real(x), wb) : e1_contfrac(Real(x), wb);
        r.check_finite("upper_incomplete_gamma");
        return r;
    }
    // Gamma(s,x) = (s-1)! e^-x sum_{j=0}^{s-1} x^j / j!
    Real sum = Real::of_long(1, wb);
    Real t = Real::of_long(1, wb);
    for (long j = 1; j < s; ++j) {
        t *= x;
        t /= j;
        sum += t;
    }
    Real fact(wb);
    mpfr_fac_ui(fact.raw(), static_cast<unsigned long>(s - 1), MPFR_RNDN);
    Real r = fact * exp(-x) * sum;
    r.check_finite("upper_incomplete_gamma");
    return r;
}

std::vector<Rational> bernoulli_numbers(int n_max) {
    if (n_max < 0) throw std::domain_error("bernoulli_numbers: n_max must be >= 0");
    static std::mutex mu;
    static std::vector<Rational> cache;  // cache[n] = B_n
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= n_max) {
        if (cache.empty()) cache.push_back(Rational(1));
        for (int m = static_cast<int>(cache.size()); m <= n_max; ++m) {
            // sum_{k=0}^{m} C(m+1,k) B_k = 0  with B_1 = -1/2
            Rational acc(0);
            Integer binom(1);  // C(m+1, k), starts at k = 0
            for (int k = 0; k < m; ++k) {
                acc += Rational(binom) * cache[static_cast<size_t>(k)];
                binom *= (m + 1 - k);
                binom /= (k + 1);
            }
            Rational b = -acc / Rational(binom);  // binom == C(m+1,m) = m+1
            b.canonicalize();
            cache.push_back(b);
        }
    }
    return std::vector<Rational>(cache.begin(), cache.begin() + n_max + 1);
}

Real hurwitz_zeta(const Real& s, const Rational& a, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    if (!(s > Real::of_long(1, wb))) throw std::domain_error("hurwitz_zeta: need s > 1");
    if (!(a > 0 && a <= 1)) throw std::domain_error("hurwitz_zeta: need 0 < a <= 1");

    long n_head = std::max<long>(16, wb / 3);
    for (int attempt = 0; attempt < 6; ++attempt, n_head *= 2) {
        // head sum_{n=0}^{N-1} (n+a)^-s
        Real head(wb);
        for (long n = 0; n < n_head; ++n) {
            Real base = Real::of_rational(a + n, wb);
            head += pow(base, -s);
        }
        Real t = Real::of_rational(a + n_head, wb);
        Real tpow_ms = pow(t, -s);  // T^-s
        Real acc = head + pow(t, Real::of_long(1, wb) - s) / (s - 1) + tpow_ms / 2;

        // correction sum_j B_2j/(2j)! (s)_(2j-1) T^(1-s-2j)
        auto bern = bernoulli_numbers(2 * 128);
        Real tinv2 = 1 / (t * t);
        Real tpow = tpow_ms / t;     // T^(-s-1)
        Real poch = s;               // (s)_1
        Integer fact(2);             // (2j)!
        bool converged = false;
        Real prev_mag(wb);
        for (long j = 1; j <= 128; ++j) {
            Rational coef = bern[static_cast<size_t>(2 * j)] / Rational(fact);
            Real term = Real::of_rational(coef, wb) * poch * tpow;
            Real mag = abs(term);
            if (j > 1 && mag > prev_mag) break;  // divergent zone reached, enlarge N
            acc += term;
            if (mag.exponent2() < acc.exponent2() - (wb + 8)) {
                converged = true;
                break;
            }
            prev_mag = mag;
            poch *= (s + (2 * j - 1)) * (s + (2 * j));
            tpow *= tinv2;
            fact *= (2 * j + 1);
            fact *= (2 * j + 2);
        }
        if (converged) {
            acc.check_finite("hurwitz_zeta");
            return acc;
        }
    }
    throw PrecisionUnreachable("hurwitz_zeta: Euler-Maclaurin did not converge");
}

} // namespace ml::numkernel
