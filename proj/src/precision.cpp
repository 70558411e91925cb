#include "mahlerlab/precision.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace ml {

PrecisionContext PrecisionContext::digits(int d, long guard) {
    if (d < 1) throw std::domain_error("PrecisionContext: target_digits must be >= 1");
    if (guard < 32) guard = 32;
    PrecisionContext ctx;
    ctx.target_digits = d;
    ctx.guard_bits = guard;
    ctx.working_bits = static_cast<long>(std::ceil(d * 3.3219280948873626)) + guard;
    return ctx;
}

PrecisionContext PrecisionContext::doubled() const {
    PrecisionContext ctx = *this;
    ctx.working_bits = 2 * working_bits;
    ctx.guard_bits = working_bits + guard_bits;  // keeps the defining inequality
    return ctx;
}

PrecisionContext PrecisionContext::with_working_bits(long bits) const {
    PrecisionContext ctx = *this;
    long needed = static_cast<long>(std::ceil(target_digits * 3.3219280948873626));
    if (bits < needed + 32) bits = needed + 32;
    ctx.working_bits = bits;
    ctx.guard_bits = bits - needed;
    return ctx;
}

Real Real::of_long(long v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of_rational(const Rational& q, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::of_integer(const Integer& z, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of_double(double v, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::of_string(const std::string& s, mpfr_prec_t bits) {
    Real r(bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::of_string: cannot parse '" + s + "'");
    return r;
}

void Real::check_finite(const char* where) const {
    if (!is_finite()) throw std::runtime_error(std::string(where) + ": non-finite result");
}

std::string Real::str(int digits) const {
    if (digits < 2) digits = 2;
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

std::string Real::str_working() const {
    int digits = static_cast<int>(static_cast<double>(prec()) * 0.30102999566398) + 1;
    return str(digits);
}

int digits_agreed(const Real& a, const Real& b) {
    Real diff = abs(a - b);
    int capacity = static_cast<int>(static_cast<double>(a.prec() < b.prec() ? a.prec() : b.prec()) *
                                    0.30102999566398);
    if (diff.is_zero()) return capacity;
    Real scale = abs(a);
    if (scale < Real::of_long(1, a.prec())) scale = Real::of_long(1, a.prec());
    Real rel = diff / scale;
    // floor(-log10(rel)) without a full log: use the binary exponent first
    double lg = -static_cast<double>(rel.exponent2()) * 0.30102999566398;
    int est = static_cast<int>(lg) - 2;
    if (est < 0) est = 0;
    // refine around the estimate
    Real ten = Real::of_long(10, a.prec());
    while (est < capacity && rel * pow_ui(ten, static_cast<unsigned long>(est + 1)) <
                                 Real::of_long(1, a.prec()))
        ++est;
    while (est > 0 &&
           rel * pow_ui(ten, static_cast<unsigned long>(est)) >= Real::of_long(1, a.prec()))
        --est;
    return est < capacity ? est : capacity;
}

} // namespace ml
