// lattice.cpp
//
// Z^2 enumeration kernels.  All point walks share for_each_point, which
// visits every (m,n) != (0,0) with Q(m,n) <= bound by solving the n-range
// quadratic per column m.  Sums in double with Kahan compensation; the
// high-precision values of the same quantities come from the L-series
// module, these are the moderate-precision cross-check routes.

#include "mahlerlab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mahlerlab/errors.hpp"

namespace ml::lattice {

std::string QuadForm::str() const {
    std::string s = std::to_string(a) + "m^2";
    if (b != 0) s += (b > 0 ? "+" : "") + std::to_string(b) + "mn";
    if (c != 0) s += (c > 0 ? "+" : "") + std::to_string(c) + "n^2";
    return s;
}

int kronecker_chi(CharLabel D, long n) {
    Integer nn(n);
    return mpz_si_kronecker(D.D, nn.get_mpz_t());
}

namespace {

struct Kahan {
    double sum = 0, comp = 0;
    void add(double v) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// visit every (m,n) != (0,0) with q(m,n) <= bound
template <typename F>
void for_each_point(const QuadForm& q, long long bound, F f) {
    if (!q.positive_definite())
        throw std::domain_error("lattice: form must be positive definite: " + q.str());
    const double disc = 4.0 * q.a * q.c - static_cast<double>(q.b) * q.b;
    const long m_max =
        static_cast<long>(std::sqrt(4.0 * q.c * static_cast<double>(bound) / disc)) + 2;
    for (long m = -m_max; m <= m_max; ++m) {
        // c n^2 + (b m) n + (a m^2 - bound) <= 0
        const double bb = static_cast<double>(q.b) * m;
        const double det =
            bb * bb - 4.0 * q.c * (static_cast<double>(q.a) * m * m - static_cast<double>(bound));
        if (det < 0) continue;
        const double root = std::sqrt(det);
        long n_lo = static_cast<long>(std::ceil((-bb - root) / (2.0 * q.c))) - 1;
        long n_hi = static_cast<long>(std::floor((-bb + root) / (2.0 * q.c))) + 1;
        while (n_lo <= n_hi && q.eval(m, n_lo) > bound) ++n_lo;
        while (n_hi >= n_lo && q.eval(m, n_hi) > bound) --n_hi;
        for (long n = n_lo; n <= n_hi; ++n) {
            if (m == 0 && n == 0) continue;
            f(m, n);
        }
    }
}

} // namespace

long rep_count(const QuadForm& q, long long k) {
    if (k < 1) throw std::domain_error("rep_count: k must be >= 1");
    long count = 0;
    for_each_point(q, k, [&](long m, long n) {
        if (q.eval(m, n) == k) ++count;
    });
    return count;
}

Real epstein_sum(const QuadForm& q, double t, int target_digits, double* err_out) {
    if (t < 2) throw std::domain_error("epstein_sum: t must be >= 2");
    if (!q.positive_definite()) throw std::domain_error("epstein_sum: form not positive definite");
    const double disc = 4.0 * q.a * q.c - static_cast<double>(q.b) * q.b;
    const double density = 2.0 * M_PI / std::sqrt(disc);  // mean of rep counts
    const double tol_base = 0.5 * std::pow(10.0, -target_digits);
    const double p = 1.5;  // modeled exponent of the post-tail residual
    const double rfac = std::pow(2.0, p) - 1.0;

    for (long long K = 10000; K <= (1LL << 26); K *= 4) {
        Kahan s1, s2, s4;
        for_each_point(q, 4 * K, [&](long m, long n) {
            const long long k = q.eval(m, n);
            const double term = std::pow(static_cast<double>(k), -t);
            s4.add(term);
            if (k <= 2 * K) s2.add(term);
            if (k <= K) s1.add(term);
        });
        auto with_tail = [&](long long kk, double s) {
            return s + density * std::pow(static_cast<double>(kk), 1.0 - t) / (t - 1.0);
        };
        const double t1 = with_tail(K, s1.sum);
        const double t2 = with_tail(2 * K, s2.sum);
        const double t4 = with_tail(4 * K, s4.sum);
        const double r21 = t2 + (t2 - t1) / rfac;
        const double r42 = t4 + (t4 - t2) / rfac;
        const double err = std::fabs(r42 - r21) + std::fabs(t4 - t2) / rfac * 0.25 + 1e-14;
        const double tol = tol_base * std::max(1.0, std::fabs(r42));
        if (err < tol) {
            if (err_out) *err_out = err;
            return Real::of_double(r42, 64);
        }
    }
    throw PrecisionUnreachable("epstein_sum: " + std::to_string(target_digits) +
                               " digits not reachable for " + q.str());
}

Real signed_lattice_sum(const ThetaFormSpec& spec, double s, int target_digits, double* err_out) {
    if (s < 3) throw std::domain_error("signed_lattice_sum: s must be >= 3");
    const double tol_base = 0.5 * std::pow(10.0, -target_digits);
    for (long long K = 40000; K <= (1LL << 26); K *= 4) {
        Kahan k1, k2, k4;
        for (const auto& term : spec.terms) {
            const double scale = term.scale.get_d();
            for_each_point(term.denominator, 4 * K, [&](long m, long n) {
                const long long den = term.denominator.eval(m, n);
                const double v = scale * static_cast<double>(term.numerator.eval(m, n)) *
                                 std::pow(static_cast<double>(den), -s);
                k4.add(v);
                if (den <= 2 * K) k2.add(v);
                if (den <= K) k1.add(v);
            });
        }
        // cusp-type cancellation: no density tail; the spread of the three
        // partial sums bounds the remaining oscillation
        const double value = k4.sum;
        const double err = std::fabs(k4.sum - k2.sum) + 0.5 * std::fabs(k2.sum - k1.sum) + 1e-13;
        if (err < tol_base * std::max(1.0, std::fabs(value))) {
            if (err_out) *err_out = err;
            return Real::of_double(value, 64);
        }
    }
    throw PrecisionUnreachable("signed_lattice_sum: " + std::to_string(target_digits) +
                               " digits not reachable");
}

IntSeries theta_coeffs(const ThetaFormSpec& spec, long m_order) {
    auto v = theta_coeffs_i64(spec, m_order);
    IntSeries out(m_order);
    for (long k = 0; k <= m_order; ++k)
        out[static_cast<size_t>(k)] = Integer(static_cast<long>(v[static_cast<size_t>(k)]));
    return out;
}

std::vector<long long> theta_coeffs_i64(const ThetaFormSpec& spec, long m_order) {
    if (m_order < 1) throw std::domain_error("theta_coeffs: order must be >= 1");
    std::vector<long long> acc(static_cast<size_t>(m_order) + 1, 0);
    for (const auto& term : spec.terms) {
        if (term.scale.get_den() != 1 && term.scale.get_den() != 2)
            throw std::domain_error("theta_coeffs: scale denominator must be 1 or 2");
        // accumulate 2*scale*num so halves stay integral until the final split
        const long long num_scale =
            2 * term.scale.get_num().get_si() / term.scale.get_den().get_si();
        for_each_point(term.denominator, m_order, [&](long m, long n) {
            const long long k = term.denominator.eval(m, n);
            acc[static_cast<size_t>(k)] += num_scale * term.numerator.eval(m, n);
        });
    }
    for (auto& v : acc) {
        if (v % 2 != 0)
            throw std::runtime_error("theta_coeffs: non-integral coefficient (invariant violation)");
        v /= 2;
    }
    return acc;
}

bool convolution_rep_check(long k) {
    if (k < 1 || std::gcd(k, 6L) != 1)
        throw std::domain_error("convolution_rep_check: k must be positive and coprime to 6");
    const long lhs = rep_count(QuadForm{2, 0, 3}, k);
    long divisor_sum = 0;
    for (long l = 1; l * l <= k; ++l) {
        if (k % l != 0) continue;
        divisor_sum += kronecker_chi(CharLabel{-24}, l);
        if (l != k / l) divisor_sum += kronecker_chi(CharLabel{-24}, k / l);
    }
    const long rhs = (1 - kronecker_chi(CharLabel{-3}, k)) * divisor_sum;
    return lhs == rhs;
}

} // namespace ml::lattice
