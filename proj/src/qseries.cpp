// qseries.cpp -- eta, Weber, s_j, G-series kernels on signed real nomes.

#include "mahlerlab/qseries.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/numkernel.hpp"

namespace ml::qseries {

namespace {

// generalized pentagonal exponents g = j(3j-1)/2, j = 1,-1,2,-2,...
// with sign (-1)^|j|; callback stops the walk by returning false
template <typename F>
void pentagonal_walk(F f) {
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2;
        long g2 = j * (3 * j + 1) / 2;
        int sgn = (j % 2 == 0) ? 1 : -1;
        if (!f(g1, sgn)) return;
        if (!f(g2, sgn)) return;
    }
}

Real exp_minus_2pi_t(const Real& t, const PrecisionContext& ctx) {
    Real pi = numkernel::const_pi(ctx);
    return exp(pi * t * (-2));
}

Rational reduced_re_mod1(const Rational& re) {
    // reduce into [0,1)
    Rational r = re;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r - Rational(fl);
}

} // namespace

Nome nome_of(const CMPoint& tau, const PrecisionContext& ctx) {
    Real t = sqrt(Real::of_rational(tau.im_sq, ctx.working_bits));
    Rational r = reduced_re_mod1(tau.re);
    int sign;
    if (r == 0)
        sign = 1;
    else if (r == Rational(1, 2))
        sign = -1;
    else
        throw std::domain_error("nome_of: re(tau) must be 0 or 1/2 (mod 1)");
    return Nome(exp_minus_2pi_t(t, ctx), sign);
}

IntSeries eta_coeffs(long m_order) {
    if (m_order < 0) throw std::domain_error("eta_coeffs: negative order");
    IntSeries s(m_order);
    s[0] = 1;
    pentagonal_walk([&](long g, int sgn) {
        if (g > m_order) return false;
        s[static_cast<size_t>(g)] += sgn;
        return true;
    });
    return s;
}

IntSeries eta_quotient_coeffs(const EtaQuotientSpec& spec, long m_order, long* lead_exponent) {
    Rational w(0);
    for (auto& [d, e] : spec.factors) {
        if (d < 1 || e == 0) throw std::domain_error("eta_quotient_coeffs: bad factor");
        w += Rational(d * e, 24);
    }
    w.canonicalize();
    if (w.get_den() != 1 || w < 0)
        throw std::domain_error("eta_quotient_coeffs: leading exponent not a non-negative integer");
    long shift = static_cast<long>(w.get_num().get_si());

    IntSeries num = IntSeries::one(m_order);
    IntSeries den = IntSeries::one(m_order);
    for (auto& [d, e] : spec.factors) {
        IntSeries base = eta_coeffs(m_order).dilate(d);
        IntSeries p = base.pow(static_cast<unsigned long>(e > 0 ? e : -e));
        if (e > 0)
            num = num * p;
        else
            den = den * p;
    }
    IntSeries q = num.div_exact(den).shift_up(shift);
    if (lead_exponent) *lead_exponent = shift;
    return q;
}

Real eta_nome(const Nome& q, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    Real qs = q.signed_value();
    const double mag = q.magnitude.to_double();
    const double log2q = mag > 0 ? std::log2(mag) : -static_cast<double>(wb);
    Real p = Real::of_long(1, wb);
    pentagonal_walk([&](long g, int sgn) {
        if (static_cast<double>(g) * log2q < -(wb + 8)) return false;
        Real term = pow_ui(qs, static_cast<unsigned long>(g));
        if (sgn > 0)
            p += term;
        else
            p -= term;
        return true;
    });
    Real r = root_ui(q.magnitude, 24) * p;
    r.check_finite("eta_nome");
    return r;
}

Real eta_value(const CMPoint& tau, const PrecisionContext& ctx) {
    return eta_nome(nome_of(tau, ctx), ctx);
}

namespace {

// eta arguments at nome magnitudes e^(-pi y) and e^(-2 pi y); the Weber
// functions are ratios of eta at these two scales
struct WeberParts {
    Real half;  // e^(-pi y), the nome of both (tau+1)/2 and tau/2
    Real full;  // e^(-2 pi y), the nome of tau
};

WeberParts weber_parts(const CMPoint& tau, const PrecisionContext& ctx) {
    if (!(reduced_re_mod1(tau.re) == 0))
        throw std::domain_error("weber: tau must be purely imaginary");
    Real y = sqrt(Real::of_rational(tau.im_sq, ctx.working_bits));
    Real pi = numkernel::const_pi(ctx);
    return WeberParts{exp(-(pi * y)), exp(pi * y * (-2))};
}

} // namespace

Real weber_f(const CMPoint& tau, const PrecisionContext& ctx) {
    WeberParts w = weber_parts(tau, ctx);
    return eta_nome(Nome(w.half, -1), ctx) / eta_nome(Nome(w.full, 1), ctx);
}

Real weber_f1(const CMPoint& tau, const PrecisionContext& ctx) {
    WeberParts w = weber_parts(tau, ctx);
    return eta_nome(Nome(w.half, 1), ctx) / eta_nome(Nome(w.full, 1), ctx);
}

Real s2(const Nome& q, const PrecisionContext& ctx) {
    if (q.sign < 0) throw std::domain_error("s2: nome must be positive");
    Real em = eta_nome(Nome(q.magnitude, -1), ctx);
    Real e2 = eta_nome(Nome(q.magnitude * q.magnitude, 1), ctx);
    Real r = pow_ui(em / e2, 24);
    r.check_finite("s2");
    return r;
}

Real s3(const Nome& q, const PrecisionContext& ctx) {
    if (q.sign < 0) throw std::domain_error("s3: nome must be positive");
    Real e1 = eta_nome(q, ctx);
    Real e3 = eta_nome(Nome(pow_ui(q.magnitude, 3), 1), ctx);
    Real r6 = pow_ui(e3 / e1, 6);
    Real s = r6 * 27 + 1 / r6;
    Real r = s * s;
    r.check_finite("s3");
    return r;
}

Real s4(const Nome& q, const PrecisionContext& ctx) {
    if (q.sign < 0) throw std::domain_error("s4: nome must be positive");
    Real e1 = eta_nome(q, ctx);
    Real e2 = eta_nome(Nome(q.magnitude * q.magnitude, 1), ctx);
    Real e4 = eta_nome(Nome(pow_ui(q.magnitude, 4), 1), ctx);
    Real dr = pow_ui(e2 / e1, 24);
    Real u4 = pow_ui(e1 * e4 * e4 / (e2 * e2 * e2), 4);
    Real r = dr * pow_ui(u4 * 16 + 1 / u4, 4);
    r.check_finite("s4");
    return r;
}

Real s_level(int level, const Nome& q, const PrecisionContext& ctx) {
    switch (level) {
        case 2: return s2(q, ctx);
        case 3: return s3(q, ctx);
        case 4: return s4(q, ctx);
        default: throw std::domain_error("s_level: level must be 2, 3 or 4");
    }
}

Real g_series(const Nome& q, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    Real qs = q.signed_value();
    const double mag = q.magnitude.to_double();
    const double log2q = mag > 0 ? std::log2(mag) : -static_cast<double>(wb);
    const double slack = std::log2(240.0) - std::log2(1.0 - mag);
    Real acc(wb);
    Real p = Real::of_long(1, wb);
    for (long n = 1;; ++n) {
        p *= qs;
        // stop once 240 n^2 |q|^n / (1 - |q|) < 2^(-wb-8)
        if (slack + 2 * std::log2(static_cast<double>(n)) + n * log2q < -(wb + 8)) break;
        acc += log1p(-p) * (n * n);
    }
    Real r = -log(q.magnitude) + acc * 240;
    r.check_finite("g_series");
    return r;
}

Real nome_boundary(int level, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    Real t(wb);
    switch (level) {
        case 2: t = Real::of_rational(Rational(1, 2), wb); break;
        case 3: t = 1 / sqrt(Real::of_long(3, wb)); break;
        case 4: t = 1 / sqrt(Real::of_long(2, wb)); break;
        default: throw std::domain_error("nome_boundary: level must be 2, 3 or 4");
    }
    return exp_minus_2pi_t(t, ctx);
}

namespace {

// one-time 100-point monotonicity scan of s_level on (0, q_boundary]
void check_monotone(int level) {
    static std::array<int, 5> done{};  // 0 unknown, 1 ok, -1 failed
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    int& flag = done[static_cast<size_t>(level)];
    if (flag == 0) {
        auto ctx = PrecisionContext::digits(15);
        Real qb = nome_boundary(level, ctx);
        flag = 1;
        Real prev(ctx.working_bits);
        for (int i = 1; i <= 100; ++i) {
            Real qi = qb * i / 100;
            Real si = s_level(level, Nome(qi, 1), ctx);
            if (i > 1 && !(si < prev)) {
                flag = -1;
                break;
            }
            prev = si;
        }
    }
    if (flag < 0) throw BracketError("invert_s: s_level not monotone on the admissible interval");
}

} // namespace

Nome invert_s(int level, const Real& k, const PrecisionContext& ctx) {
    const long wb = ctx.working_bits;
    check_monotone(level);
    Real qb = nome_boundary(level, ctx);
    Real s_at_boundary = s_level(level, Nome(qb, 1), ctx);
    // s_level attains its minimum at the boundary nome with zero slope, so a
    // boundary target must return the boundary point itself; bisecting there
    // would cost half the working precision
    if (abs(k - s_at_boundary) < abs(k) * mul_2si(Real::of_long(1, wb), -(2 * wb / 3)))
        return Nome(qb, 1);
    if (k < s_at_boundary) throw BracketError("invert_s: k below the boundary value of s_level");

    // s_level(q) ~ 1/q as q -> 0, so q_lo ~ 1/(4k) puts s above k
    Real q_lo = 1 / (k * 4);
    if (qb / 2 < q_lo) q_lo = qb / 2;
    for (int tries = 0; s_level(level, Nome(q_lo, 1), ctx) < k; ++tries) {
        q_lo = q_lo / 16;
        if (tries > 64) throw BracketError("invert_s: could not bracket from below");
    }

    Real lo = q_lo, hi = qb;  // s(lo) >= k >= s(hi)
    Real f_lo = s_level(level, Nome(lo, 1), ctx) - k;
    Real f_hi = s_level(level, Nome(hi, 1), ctx) - k;
    if (f_lo.sign() < 0 || f_hi.sign() > 0)
        throw BracketError("invert_s: endpoints do not straddle k");

    for (int it = 0; it < 64 && (hi - lo).exponent2() > lo.exponent2() - 54; ++it) {
        Real mid = (lo + hi) / 2;
        Real fm = s_level(level, Nome(mid, 1), ctx) - k;
        if (fm.sign() >= 0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }

    // secant refinement inside the bracket
    Real a = lo, fa = f_lo, b = hi, fb = f_hi;
    for (int it = 0; it < 256; ++it) {
        if ((b - a).exponent2() <= a.exponent2() - (wb + 2)) break;
        Real x(wb);
        Real denom = fb - fa;
        bool secant_ok = false;
        if (!denom.is_zero()) {
            x = b - fb * (b - a) / denom;
            secant_ok = (x > a) && (x < b);
        }
        if (!secant_ok) x = (a + b) / 2;
        Real fx = s_level(level, Nome(x, 1), ctx) - k;
        if (fx.sign() >= 0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if (fx.is_zero()) {
            a = x;
            b = x;
            break;
        }
    }
    return Nome((a + b) / 2, 1);
}

} // namespace ml::qseries
