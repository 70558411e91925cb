#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/hyper.hpp"
#include "mahlerlab/numkernel.hpp"

using namespace ml;
using namespace ml::hyper;
namespace nk = ml::numkernel;

namespace {

HyperParams params_2f1_log() { return {{Rational(1), Rational(1)}, {Rational(2)}}; }

HyperParams params_5f4(const Rational& a1, const Rational& a2, const Rational& a3) {
    return {{a1, a2, a3, Rational(1), Rational(1)},
            {Rational(2), Rational(2), Rational(2), Rational(2)}};
}

// direct summation with a Richardson-corrected power tail, the oracle for
// the accelerated unit-argument values
double direct_unit_oracle(const HyperParams& p, int x_sign, long n_big) {
    auto partial = [&](long N) {
        double term = 1.0, acc = 0.0;
        for (long n = 0; n < N; ++n) {
            acc += term;
            double r = 1.0;
            for (const auto& a : p.upper) r *= a.get_d() + n;
            for (const auto& b : p.lower) r /= b.get_d() + n;
            r /= (n + 1);
            term *= x_sign * r;
        }
        return acc;
    };
    double s1 = partial(n_big), s2 = partial(2 * n_big);
    if (x_sign > 0) {
        // tail ~ c N^(-3/2) for sigma = 3/2
        const double f = std::pow(2.0, 1.5) - 1.0;
        return s2 + (s2 - s1) / f;
    }
    return s2;  // alternating partial sums at even/odd split already tight
}

} // namespace

TEST_CASE("pfq at x = 0 is 1") {
    auto ctx = PrecisionContext::digits(20);
    Real v = pfq(params_5f4(Rational(5, 4), Rational(3, 2), Rational(7, 4)), Rational(0), ctx);
    CHECK(v.to_double() == 1.0);
}

TEST_CASE("2F1(1,1;2;1/2) = 2 log 2") {
    auto ctx = PrecisionContext::digits(40);
    Real v = pfq(params_2f1_log(), Rational(1, 2), ctx);
    Real ref = 2 * log(Real::of_long(2, ctx.working_bits));
    CHECK(digits_agreed(v, ref) >= 40);

    // 200-term direct oracle
    double term = 1, acc = 0;
    for (int n = 0; n < 200; ++n) {
        acc += term;
        term *= 0.5 * (n + 1.0) * (n + 1.0) / ((n + 2.0) * (n + 1.0));
    }
    CHECK(v.to_double() == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("partial sums increase and pfq >= 1 for positive parameters") {
    auto ctx = PrecisionContext::digits(25);
    for (double x : {0.1, 0.5, 0.9}) {
        Real v = pfq(params_5f4(Rational(3, 2), Rational(3, 2), Rational(3, 2)),
                     Real::of_double(x, ctx.working_bits), ctx);
        CHECK(v.to_double() >= 1.0);
    }
}

TEST_CASE("parameter permutation invariance") {
    auto ctx = PrecisionContext::digits(30);
    Rational x(1, 9);
    Real a = pfq(params_5f4(Rational(5, 4), Rational(3, 2), Rational(7, 4)), x, ctx);
    Real b = pfq(params_5f4(Rational(7, 4), Rational(5, 4), Rational(3, 2)), x, ctx);
    CHECK(a == b);  // term recurrence is exactly symmetric
}

TEST_CASE("pfq precision doubling") {
    auto ctx = PrecisionContext::digits(30);
    Rational x(2, 27);
    auto p = params_5f4(Rational(4, 3), Rational(3, 2), Rational(5, 3));
    Real a = pfq(p, x, ctx);
    Real b = pfq(p, x, ctx.doubled());
    CHECK(digits_agreed(a, b) >= 30);
}

TEST_CASE("pfq rejects |x| >= 1 and bad lower parameters") {
    auto ctx = PrecisionContext::digits(10);
    CHECK_THROWS_AS(pfq(params_2f1_log(), Rational(1), ctx), std::domain_error);
    CHECK_THROWS_AS(pfq(params_2f1_log(), Rational(-3, 2), ctx), std::domain_error);
    HyperParams bad{{Rational(1)}, {Rational(0)}};
    CHECK_THROWS_AS(pfq(bad, Rational(1, 2), ctx), std::domain_error);
}

TEST_CASE("unit-argument 5F4 via Levin-u against the direct oracle") {
    auto ctx = PrecisionContext::digits(8);
    for (auto p : {params_5f4(Rational(3, 2), Rational(3, 2), Rational(3, 2)),
                   params_5f4(Rational(4, 3), Rational(3, 2), Rational(5, 3)),
                   params_5f4(Rational(5, 4), Rational(3, 2), Rational(7, 4))}) {
        CHECK(p.sigma() == Rational(3, 2));
        int achieved = 0;
        Real v = pfq_unit(p, +1, ctx, &achieved);
        CHECK(achieved >= 8);
        double ref = direct_unit_oracle(p, +1, 1L << 21);
        CHECK(std::fabs(v.to_double() - ref) < 1e-8 * std::fabs(ref));
    }
}

TEST_CASE("alternating unit argument brackets its limit") {
    auto ctx = PrecisionContext::digits(8);
    auto p = params_5f4(Rational(3, 2), Rational(3, 2), Rational(3, 2));
    Real v = pfq_unit(p, -1, ctx);

    // partial sums of an alternating series with eventually monotone terms
    // bracket the limit
    double term = 1.0, acc = 0.0;
    double lo = -1e300, hi = 1e300;
    for (long n = 0; n < 4000; ++n) {
        acc += term;
        if (n > 100) {
            if (term > 0)
                hi = std::min(hi, acc);
            else
                lo = std::max(lo, acc);
        }
        double r = 1.0;
        for (const auto& a : p.upper) r *= a.get_d() + n;
        for (const auto& b : p.lower) r /= b.get_d() + n;
        r /= (n + 1);
        term *= -r;
    }
    CHECK(v.to_double() > lo - 1e-12);
    CHECK(v.to_double() < hi + 1e-12);
    CHECK(std::fabs(v.to_double() - direct_unit_oracle(p, -1, 1L << 21)) < 1e-8);
}

TEST_CASE("pfq_unit argument validation") {
    auto ctx = PrecisionContext::digits(8);
    CHECK_THROWS_AS(pfq_unit(params_5f4(Rational(3, 2), Rational(3, 2), Rational(3, 2)), 2, ctx),
                    std::domain_error);
    // sigma < 0: divergent at |x| = 1
    HyperParams div{{Rational(5), Rational(5)}, {Rational(1, 2)}};
    CHECK_THROWS_AS(pfq_unit(div, 1, ctx), std::domain_error);
}
