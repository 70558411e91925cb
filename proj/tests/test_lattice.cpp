#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/lattice.hpp"

using namespace ml;
using namespace ml::lattice;

namespace {
const QuadForm Q1{1, 0, 6};   // m^2 + 6n^2
const QuadForm Q2{2, 0, 3};   // 2m^2 + 3n^2
} // namespace

TEST_CASE("kronecker chi_-8 case table") {
    // 1 for k = 1,3 (mod 8); -1 for k = 5,7 (mod 8); 0 for even k
    for (long k = 1; k <= 64; ++k) {
        int v = kronecker_chi({-8}, k);
        long r = k % 8;
        if (k % 2 == 0)
            CHECK(v == 0);
        else if (r == 1 || r == 3)
            CHECK(v == 1);
        else
            CHECK(v == -1);
    }
    CHECK(kronecker_chi({-8}, 3) == 1);
    CHECK(kronecker_chi({-8}, 5) == -1);
}

TEST_CASE("kronecker chi(1) = 1 and complete multiplicativity") {
    for (long D : {-3L, -4L, -8L, 5L, 8L, 12L, 24L, -24L, -40L}) {
        CHECK(kronecker_chi({D}, 1) == 1);
        for (long m = 1; m <= 30; ++m)
            for (long n = 1; n <= 30; ++n)
                CHECK(kronecker_chi({D}, m * n) == kronecker_chi({D}, m) * kronecker_chi({D}, n));
        // odd characters are exactly the negative discriminants here
        CHECK(kronecker_chi({D}, -1) == (D < 0 ? -1 : 1));
    }
}

TEST_CASE("rep counts") {
    CHECK(rep_count(Q1, 1) == 2);  // (+-1, 0)
    CHECK(rep_count(Q2, 5) == 4);  // (+-1, +-1)
    CHECK(rep_count(Q2, 7) == 0);
    for (long l = 1; l <= 50; ++l) CHECK(rep_count(Q2, 2 * l) == rep_count(Q1, l));
    for (long l = 1; l <= 100; ++l) {
        CHECK(rep_count(Q2, 3 * l) == rep_count(Q1, l));
        CHECK(rep_count(Q2, 6 * l) == rep_count(Q2, l));
    }
    CHECK_THROWS_AS(rep_count(Q1, 0), std::domain_error);
    CHECK_THROWS_AS(rep_count(QuadForm{1, 0, -1}, 4), std::domain_error);
}

TEST_CASE("rep count against a brute-force box") {
    for (long k = 1; k <= 200; ++k) {
        long brute = 0;
        for (long m = -40; m <= 40; ++m)
            for (long n = -40; n <= 40; ++n)
                if (!(m == 0 && n == 0) && Q2.eval(m, n) == k) ++brute;
        CHECK(rep_count(Q2, k) == brute);
    }
}

TEST_CASE("Dirichlet representation formula for discriminant -24") {
    CHECK(convolution_rep_check(1));
    CHECK(convolution_rep_check(5));
    CHECK(convolution_rep_check(7));
    for (long k = 1; k <= 500; ++k) {
        if (std::gcd(k, 6L) != 1) continue;
        CHECK(convolution_rep_check(k));
    }
    CHECK_THROWS_AS(convolution_rep_check(6), std::domain_error);
}

TEST_CASE("theta coefficients of the double-sum recipes") {
    ThetaFormSpec h{{{QuadForm{1, 0, -4}, QuadForm{1, 0, 4}, Rational(1, 2)}}};
    auto ah = theta_coeffs(h, 16);
    CHECK(ah.at(1) == 1);
    CHECK(ah.at(5) == -6);
    CHECK(ah.at(9) == 9);
    CHECK(ah.at(2) == 0);

    ThetaFormSpec g24_1{{{QuadForm{1, 0, -6}, QuadForm{1, 0, 6}, Rational(1, 2)},
                         {QuadForm{2, 0, -3}, QuadForm{2, 0, 3}, Rational(1, 2)}}};
    auto a1 = theta_coeffs(g24_1, 10);
    CHECK(a1.at(1) == 1);
    CHECK(a1.at(2) == 2);
    CHECK(a1.at(3) == -3);
    CHECK(a1.at(4) == 4);
    CHECK(a1.at(5) == -2);

    ThetaFormSpec g40{{{QuadForm{1, 0, -10}, QuadForm{1, 0, 10}, Rational(1, 2)},
                       {QuadForm{5, 0, -2}, QuadForm{5, 0, 2}, Rational(1, 2)}}};
    auto a40 = theta_coeffs(g40, 10);
    CHECK(a40.at(1) == 1);
    CHECK(a40.at(2) == -2);
    CHECK(a40.at(4) == 4);
    CHECK(a40.at(5) == 5);
}

TEST_CASE("antisymmetric theta sum vanishes at c = 1") {
    // numerator m^2 - n^2 over denominator m^2 + n^2 is odd under the
    // (m,n) swap, so every coefficient cancels
    ThetaFormSpec spec{{{QuadForm{1, 0, -1}, QuadForm{1, 0, 1}, Rational(1, 2)}}};
    auto a = theta_coeffs(spec, 64);
    for (long k = 1; k <= 64; ++k) CHECK(a.at(k) == 0);
}


TEST_CASE("rep counts for a form with a cross term") {
    // m^2 + mn + n^2, discriminant -3: R(1) = 6 (the sixth roots of unity)
    QuadForm e{1, 1, 1};
    CHECK(rep_count(e, 1) == 6);
    CHECK(rep_count(e, 2) == 0);
    CHECK(rep_count(e, 3) == 6);
    for (long k = 1; k <= 120; ++k) {
        long brute = 0;
        for (long m = -25; m <= 25; ++m)
            for (long n = -25; n <= 25; ++n)
                if (!(m == 0 && n == 0) && e.eval(m, n) == k) ++brute;
        CHECK(rep_count(e, k) == brute);
    }
}

TEST_CASE("epstein sum golden value S(1,0,1;2)") {
    // S(1,0,1;t) = 4 zeta(t) L(chi_-4,t); at t = 2 this is (2 pi^2/3) G
    double err = 0;
    Real s = epstein_sum(QuadForm{1, 0, 1}, 2.0, 9, &err);
    const double catalan = 0.915965594177219015;
    const double ref = 2.0 * M_PI * M_PI / 3.0 * catalan;
    CHECK(std::fabs(s.to_double() - ref) < 2e-9);
    CHECK(err < 1e-9);
}

TEST_CASE("epstein sum symmetry S(1,0,4) = S(4,0,1)") {
    Real a = epstein_sum(QuadForm{1, 0, 4}, 2.0, 8);
    Real b = epstein_sum(QuadForm{4, 0, 1}, 2.0, 8);
    CHECK(std::fabs(a.to_double() - b.to_double()) < 1e-8);
}

TEST_CASE("epstein rejects t < 2 and unreachable precision") {
    CHECK_THROWS_AS(epstein_sum(QuadForm{1, 0, 1}, 1.5, 6), std::domain_error);
    CHECK_THROWS_AS(epstein_sum(QuadForm{1, 0, 1}, 2.0, 15), PrecisionUnreachable);
}

TEST_CASE("signed lattice sum basic behaviour") {
    // spec for h at s = 3: (1/2) sum' (m^2-4n^2)/(m^2+4n^2)^3, which is
    // L(h,3); direct partial-sum oracle over a big box
    ThetaFormSpec h{{{QuadForm{1, 0, -4}, QuadForm{1, 0, 4}, Rational(1, 2)}}};
    double err = 0;
    Real v = signed_lattice_sum(h, 3.0, 6, &err);

    double oracle = 0;
    for (long m = -1500; m <= 1500; ++m)
        for (long n = -1500; n <= 1500; ++n) {
            if (m == 0 && n == 0) continue;
            double den = static_cast<double>(m) * m + 4.0 * n * n;
            oracle += 0.5 * (static_cast<double>(m) * m - 4.0 * n * n) / (den * den * den);
        }
    CHECK(std::fabs(v.to_double() - oracle) < 5e-6);
    CHECK(err < 5e-7);
    CHECK_THROWS_AS(signed_lattice_sum(h, 2.5, 6), std::domain_error);
}
