// qseries.hpp
//
// Nome-based evaluators.  Everything here is real arithmetic on a signed
// real nome q = sign * e^(-2 pi t):
//
//   eta(tau) = q^(1/24) prod (1 - q^n)        (Euler pentagonal series)
//   Weber f(tau)  = e^(-pi i/24) eta((tau+1)/2) / eta(tau)
//   Weber f1(tau) = eta(tau/2) / eta(tau)
//   s2(q) = -Delta(tau + 1/2)/Delta(2 tau + 1)
//         = (1/q) prod ((1-(-q)^n)/(1-q^(2n)))^24
//   s3(q) = (27 (eta(3tau)/eta(tau))^6 + (eta(tau)/eta(3tau))^6)^2
//   s4(q) = Delta(2tau)/Delta(tau) *
//           (16 (eta eta4^2/eta2^3)^4 + (eta2^3/(eta eta4^2))^4)^4
//   G(q)  = Re(-log q + 240 sum n^2 log(1 - q^n))
//
// plus exact integer q-expansions of eta quotients, and the numeric
// inverse of s_j on its admissible real-nome interval.

#ifndef MAHLERLAB_QSERIES_HPP
#define MAHLERLAB_QSERIES_HPP

#include <utility>
#include <vector>

#include "mahlerlab/intseries.hpp"
#include "mahlerlab/precision.hpp"

namespace ml::qseries {

// tau = re + i sqrt(im_sq); only re in {0, 1/2} (mod 1) ever occurs here.
struct CMPoint {
    Rational re;
    Rational im_sq;
    CMPoint(Rational r, Rational i) : re(std::move(r)), im_sq(std::move(i)) {
        if (!(im_sq > 0)) throw std::domain_error("CMPoint: im_sq must be positive");
    }
    static CMPoint imag(const Rational& im_sq) { return CMPoint(Rational(0), im_sq); }
};

// signed real nome; sign -1 carries the -q needed by Delta(tau + 1/2)
struct Nome {
    Real magnitude;
    int sign = 1;
    Nome(Real mag, int s) : magnitude(std::move(mag)), sign(s) {
        if (!(magnitude.sign() > 0) || !(magnitude < Real::of_long(1, magnitude.prec())))
            throw std::domain_error("Nome: magnitude must lie in (0,1)");
        if (s != 1 && s != -1) throw std::domain_error("Nome: sign must be +-1");
    }
    Real signed_value() const { return sign > 0 ? magnitude : -magnitude; }
};

// eta quotient prod_d eta(d tau)^(e_d)
struct EtaQuotientSpec {
    std::vector<std::pair<long, long>> factors;  // (multiplier d, exponent e)
};

// nome of a CM point: |q| = e^(-2 pi sqrt(im_sq)), sign -1 iff re = 1/2 (mod 1)
Nome nome_of(const CMPoint& tau, const PrecisionContext& ctx);

// coefficients of prod_{n>=1} (1 - q^n) up to q^M (sparse pentagonal series)
IntSeries eta_coeffs(long m_order);

// integer expansion of an eta quotient including its q^(sum d e_d / 24)
// prefactor, which must be a non-negative integer
IntSeries eta_quotient_coeffs(const EtaQuotientSpec& spec, long m_order,
                              long* lead_exponent = nullptr);

// |q|^(1/24) prod (1 - q^n) at a signed real nome
Real eta_nome(const Nome& q, const PrecisionContext& ctx);

// eta at a CM point with re in {0, 1/2}; for re = 1/2 the constant phase
// e^(i pi/24) is stripped, leaving the real factor the Weber functions need
Real eta_value(const CMPoint& tau, const PrecisionContext& ctx);

// Weber functions at purely imaginary tau
Real weber_f(const CMPoint& tau, const PrecisionContext& ctx);
Real weber_f1(const CMPoint& tau, const PrecisionContext& ctx);

// modular parameters at a positive real nome
Real s2(const Nome& q, const PrecisionContext& ctx);
Real s3(const Nome& q, const PrecisionContext& ctx);
Real s4(const Nome& q, const PrecisionContext& ctx);
Real s_level(int level, const Nome& q, const PrecisionContext& ctx);

// G(q) = Re(-log q + 240 sum n^2 log(1-q^n)); signed nome allowed
Real g_series(const Nome& q, const PrecisionContext& ctx);

// Largest admissible nome for s_level: e^(-2 pi t_min) with
// t_min = 1/2, 1/sqrt 3, 1/sqrt 2 for levels 2, 3, 4.
Real nome_boundary(int level, const PrecisionContext& ctx);

// Inverse of s_level on (0, nome_boundary]: bisection (bracket-verified,
// after a one-time 100-point monotonicity scan) followed by secant.
Nome invert_s(int level, const Real& k, const PrecisionContext& ctx);

} // namespace ml::qseries

#endif
