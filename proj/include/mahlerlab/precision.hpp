// precision.hpp
//
// PrecisionContext (decimal target -> binary working precision with guard
// bits) and Real, a value-semantics wrapper over MPFR.  Every numeric result
// in the library is a Real carrying the binary precision it was computed at.
// NaN/Inf are error states: module boundaries call check_finite() before
// returning.

#ifndef MAHLERLAB_PRECISION_HPP
#define MAHLERLAB_PRECISION_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace ml {

using Rational = mpq_class;
using Integer = mpz_class;

struct PrecisionContext {
    int target_digits = 30;   // requested decimal digits
    long guard_bits = 32;     // extra binary headroom, floor 32
    long working_bits = 132;  // >= ceil(target_digits*log2(10)) + guard_bits

    static PrecisionContext digits(int d, long guard = 32);
    PrecisionContext doubled() const;  // same target, doubled working precision
    PrecisionContext with_working_bits(long bits) const;
};

class Real {
public:
    explicit Real(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits < 2 ? 2 : bits); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_long(long v, mpfr_prec_t bits);
    static Real of_rational(const Rational& q, mpfr_prec_t bits);
    static Real of_integer(const Integer& z, mpfr_prec_t bits);
    static Real of_double(double v, mpfr_prec_t bits);
    static Real of_string(const std::string& s, mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    void check_finite(const char* where) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // scientific-notation decimal string with the given significant digits
    std::string str(int digits) const;
    // full decimal expansion of the working precision
    std::string str_working() const;

    // log2 |x| rounded toward -inf; 'fallback' when x == 0
    long exponent2(long fallback = -1000000000L) const {
        if (mpfr_zero_p(v_)) return fallback;
        return static_cast<long>(mpfr_get_exp(v_));
    }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
    Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, long k) {
        Real r(a.prec());
        mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long k, const Real& a) { return a * k; }
    friend Real operator/(const Real& a, long k) {
        Real r(a.prec());
        mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long k, const Real& a) {
        Real r(a.prec());
        mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long k) {
        Real r(a.prec());
        mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long k) {
        Real r(a.prec());
        mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real operator+(long k, const Real& a) { return a + k; }
    friend Real operator-(long k, const Real& a) {
        Real r(a.prec());
        mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
        return r;
    }

    friend Real sqrt(const Real& x) { return un(x, mpfr_sqrt); }
    friend Real exp(const Real& x) { return un(x, mpfr_exp); }
    friend Real log(const Real& x) { return un(x, mpfr_log); }
    friend Real log1p(const Real& x) { return un(x, mpfr_log1p); }
    friend Real expm1(const Real& x) { return un(x, mpfr_expm1); }
    friend Real abs(const Real& x) { return un(x, mpfr_abs); }
    friend Real pow_ui(const Real& x, unsigned long n) {
        Real r(x.prec());
        mpfr_pow_ui(r.v_, x.raw(), n, MPFR_RNDN);
        return r;
    }
    friend Real root_ui(const Real& x, unsigned long n) {
        Real r(x.prec());
        mpfr_rootn_ui(r.v_, x.raw(), n, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& x, const Real& y) { return bin(x, y, mpfr_pow); }
    friend Real mul_2si(const Real& x, long e) {
        Real r(x.prec());
        mpfr_mul_2si(r.v_, x.raw(), e, MPFR_RNDN);
        return r;
    }

private:
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(const Real& a, const Real& b, BinFn f) {
        Real r(a.prec() > b.prec() ? a.prec() : b.prec());
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(const Real& a, UnFn f) {
        Real r(a.prec());
        f(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// |a - b| expressed as agreed decimal digits relative to max(1, |a|):
// floor(-log10(|a-b| / max(1,|a|))).  Exact agreement reports the digit
// capacity of the working precision.
int digits_agreed(const Real& a, const Real& b);

} // namespace ml

#endif
