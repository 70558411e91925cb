// lattice.hpp
//
// Binary quadratic forms and everything summed over Z^2: representation
// counts, Epstein-type sums sum' 1/Q(m,n)^t, signed lattice sums for
// weight-3 Hecke L-series, exact theta-expansion coefficients, Kronecker
// characters, and the Dirichlet representation-count identity for forms of
// discriminant -24.

#ifndef MAHLERLAB_LATTICE_HPP
#define MAHLERLAB_LATTICE_HPP

#include <string>
#include <vector>

#include "mahlerlab/intseries.hpp"
#include "mahlerlab/precision.hpp"

namespace ml::lattice {

// integer quadratic a m^2 + b m n + c n^2 (definiteness checked where needed)
struct QuadForm {
    long a = 1, b = 0, c = 1;
    long long eval(long long m, long long n) const {
        return a * m * m + b * m * n + c * n * n;
    }
    bool positive_definite() const { return a > 0 && 4 * a * c - b * b > 0; }
    long long discriminant() const { return static_cast<long long>(b) * b - 4LL * a * c; }
    std::string str() const;
};

// one signed lattice term: scale * numerator(m,n) q^denominator(m,n)
struct ThetaTerm {
    QuadForm numerator;    // any integer quadratic
    QuadForm denominator;  // positive definite
    Rational scale{1, 2};
};

struct ThetaFormSpec {
    std::vector<ThetaTerm> terms;
};

struct CharLabel {
    long D = 1;
};

// Kronecker symbol (D/n)
int kronecker_chi(CharLabel D, long n);

// #{(m,n) in Z^2 : Q(m,n) = k}, exact, k >= 1
long rep_count(const QuadForm& q, long long k);

// sum' over Z^2 \ {0} of Q(m,n)^-t to roughly target_digits decimal digits
// (low-precision op: shell partial sums + analytic density tail + Richardson,
// K doubling until the spread-based error estimate meets the request).
// Throws PrecisionUnreachable when the cap is hit first.
Real epstein_sum(const QuadForm& q, double t, int target_digits, double* err_out = nullptr);

// sum of scale * num(m,n)/den(m,n)^s over Z^2 \ {0} across all terms
Real signed_lattice_sum(const ThetaFormSpec& spec, double s, int target_digits,
                        double* err_out = nullptr);

// exact coefficients a(0..M) of sum_terms scale * num(m,n) q^(den(m,n));
// every coefficient must resolve to an integer
IntSeries theta_coeffs(const ThetaFormSpec& spec, long m_order);

// same coefficients as int64 (for multi-million-term direct sums)
std::vector<long long> theta_coeffs_i64(const ThetaFormSpec& spec, long m_order);

// R_{2m^2+3n^2}(k) == (1 - chi_-3(k)) sum_{l|k} chi_-24(l) for gcd(k,6) = 1
bool convolution_rep_check(long k);

} // namespace ml::lattice

#endif
