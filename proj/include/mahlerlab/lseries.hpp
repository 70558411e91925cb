// lseries.hpp
//
// High-precision L-values.
//
//   dirichlet_l            L(chi_D, s) = |D|^-s sum_j chi_D(j) zeta(s, j/|D|)
//   dirichlet_lprime_minus1  L'(chi_D,-1) = |D|^(3/2)/(4 pi) L(chi_D, 2)
//                          (odd character functional equation at s = 2)
//   newform_l3             L(f,3) for a weight-3 form with real coefficients
//                          and Fricke sign epsilon, by the smoothed sum
//     L(f,3) = ((2pi)^3/2) sum_k a(k) [ Gamma(3,c_k)/(2 pi k)^3
//                                       + eps N^(-3/2) E1(c_k) ],
//     c_k = 2 pi k / sqrt(N)   (split point y0 = 1/sqrt(N) in
//     Lambda(s) = eps Lambda(3-s), Lambda(s) = (sqrt N/2pi)^s Gamma(s) L(f,s))
//   lprime0_from_l3        L'(f,0) = 2 (sqrt N / 2 pi)^3 L(f,3) when eps = +1
//   eisenstein_kronecker   the weight-3 Eisenstein-Kronecker double sums
//                          expressing f_2/f_3/f_4 directly (low precision)
//
// Coefficient sequences come from the lattice module (theta recipes) or
// from ingested files; this module never touches the eta/nome route.

#ifndef MAHLERLAB_LSERIES_HPP
#define MAHLERLAB_LSERIES_HPP

#include <string>
#include <vector>

#include "mahlerlab/lattice.hpp"
#include "mahlerlab/precision.hpp"

namespace ml::lseries {

// integer Fourier coefficients a(1..M) of a weight-3 newform
struct QExpansion {
    std::string label;
    long level = 0;
    long char_d = 0;  // nebentypus as a Kronecker label
    int epsilon = +1;
    std::vector<long long> a;  // 1-based, a[0] unused
    long count() const { return static_cast<long>(a.size()) - 1; }
};

struct LValue {
    Real value;
    std::string quantity;
    std::string method;
    Real error_estimate;
};

// the seven built-in forms: f(8), g(12), h(16), g48, g24-1, g24-2, g40
struct BuiltinForm {
    std::string label;
    long level;
    long char_d;
    int epsilon;
    lattice::ThetaFormSpec theta;
};

const std::vector<BuiltinForm>& builtin_forms();
const BuiltinForm* find_builtin(const std::string& label);
QExpansion builtin_coeffs(const std::string& label, long m_order);

// L(chi_D, s) for integer s >= 2; D = 1 gives the Riemann zeta value
LValue dirichlet_l(long D, long s, const PrecisionContext& ctx);

// L'(chi_D, -1), D < 0 (odd character)
LValue dirichlet_lprime_minus1(long D, const PrecisionContext& ctx);

// coefficients required by newform_l3 at this precision
long required_terms(long level, const PrecisionContext& ctx);

// smoothed L(f,3); throws InsufficientCoefficients naming required_terms
LValue newform_l3(const QExpansion& form, const PrecisionContext& ctx);

// L'(f,0) from L(f,3); only the + functional-equation sign is defined
Real lprime0_from_l3(long level, const Real& l3, int epsilon, const PrecisionContext& ctx);

// L'(f,0) for a coefficient sequence (composition of the two calls above)
LValue lprime0(const QExpansion& form, const PrecisionContext& ctx);

// Eisenstein-Kronecker double sum for tau = re + i sqrt(im_sq):
//   pref(j) * sum'_{m,n} ( -(4(m x + n)^2/D1^3 - 1/D1^2)
//                          + j^2 (4(j m x + n)^2/Dj^3 - 1/Dj^2) ),
//   Dk = (k m x + n)^2 + (k m y)^2,
// with (j, pref) = (4, 2y/pi^3), (3, 15y/(4 pi^3)), (2, 10y/pi^3), i.e. the
// direct expressions for f2, f3, f4.  Low precision (>= 4 digits), box
// summation with Richardson on R, 2R; R capped at 2e4.
Real eisenstein_kronecker(const Rational& re, const Rational& im_sq, int j, int target_digits,
                          double* err_out = nullptr);

} // namespace ml::lseries

#endif
