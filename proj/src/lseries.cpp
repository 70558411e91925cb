// lseries.cpp -- Dirichlet values, smoothed weight-3 L-values, conversions,
// Eisenstein-Kronecker double sums.

#include "mahlerlab/lseries.hpp"

#include <algorithm>
#include <cmath>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/numkernel.hpp"

namespace ml::lseries {

using lattice::CharLabel;
using lattice::QuadForm;
using lattice::ThetaFormSpec;
namespace nk = ml::numkernel;

namespace {

ThetaFormSpec single(long cpos) {
    return {{{QuadForm{1, 0, -cpos}, QuadForm{1, 0, cpos}, Rational(1, 2)}}};
}

ThetaFormSpec pair_spec(long c1, long a2, long c2) {
    return {{{QuadForm{1, 0, -c1}, QuadForm{1, 0, c1}, Rational(1, 2)},
             {QuadForm{a2, 0, -c2}, QuadForm{a2, 0, c2}, Rational(1, 2)}}};
}

} // namespace

const std::vector<BuiltinForm>& builtin_forms() {
    static const std::vector<BuiltinForm> forms = {
        {"f", 8, -8, +1, single(2)},
        {"g", 12, -3, +1, single(3)},
        {"h", 16, -4, +1, single(4)},
        {"g48", 48, -3, +1, pair_spec(12, 3, 4)},
        {"g24-1", 24, -24, +1, pair_spec(6, 2, 3)},
        {"g24-2", 24, -24, +1, pair_spec(6, 3, 2)},
        {"g40", 40, -40, +1, pair_spec(10, 5, 2)},
    };
    return forms;
}

const BuiltinForm* find_builtin(const std::string& label) {
    for (const auto& f : builtin_forms())
        if (f.label == label) return &f;
    return nullptr;
}

QExpansion builtin_coeffs(const std::string& label, long m_order) {
    const BuiltinForm* f = find_builtin(label);
    if (!f) throw std::domain_error("builtin_coeffs: unknown form label '" + label + "'");
    QExpansion q;
    q.label = f->label;
    q.level = f->level;
    q.char_d = f->char_d;
    q.epsilon = f->epsilon;
    q.a = lattice::theta_coeffs_i64(f->theta, m_order);
    return q;
}

LValue dirichlet_l(long D, long s, const PrecisionContext& ctx) {
    if (s < 2) throw std::domain_error("dirichlet_l: s must be >= 2");
    if (D == 0) throw std::domain_error("dirichlet_l: D must be nonzero");
    const long wb = ctx.working_bits;
    const long q = D < 0 ? -D : D;
    Real ss = Real::of_long(s, wb);
    Real acc(wb);
    for (long j = 1; j <= q; ++j) {
        int chi = lattice::kronecker_chi(CharLabel{D}, j);
        if (chi == 0) continue;
        Real z = nk::hurwitz_zeta(ss, Rational(j, q), ctx);
        if (chi > 0)
            acc += z;
        else
            acc -= z;
    }
    Real value = acc / pow_ui(Real::of_long(q, wb), static_cast<unsigned long>(s));
    value.check_finite("dirichlet_l");
    Real err = mul_2si(abs(value) + 1, -(wb - 8));
    return LValue{value, "L(chi_" + std::to_string(D) + "," + std::to_string(s) + ")",
                  "hurwitz-decomposition", err};
}

LValue dirichlet_lprime_minus1(long D, const PrecisionContext& ctx) {
    if (D >= 0) throw std::domain_error("dirichlet_lprime_minus1: D must be negative (odd chi)");
    const long wb = ctx.working_bits;
    LValue l2 = dirichlet_l(D, 2, ctx);
    Real absd = Real::of_long(-D, wb);
    Real factor = absd * sqrt(absd) / (4 * nk::const_pi(ctx));
    Real value = factor * l2.value;
    Real err = mul_2si(abs(value) + 1, -(wb - 8));
    return LValue{value, "L'(chi_" + std::to_string(D) + ",-1)", "functional-eq(s=2)", err};
}

long required_terms(long level, const PrecisionContext& ctx) {
    const double wb = static_cast<double>(ctx.working_bits);
    const double sqn = std::sqrt(static_cast<double>(level));
    const double c_needed = (wb + 12) * 0.6931471805599453 + 3.0 * std::log(wb * sqn + 16.0) + 8.0;
    return static_cast<long>(sqn * c_needed / (2.0 * M_PI)) + 8;
}

LValue newform_l3(const QExpansion& form, const PrecisionContext& ctx) {
    if (form.level < 1) throw std::domain_error("newform_l3: bad level");
    if (form.epsilon != 1 && form.epsilon != -1)
        throw std::domain_error("newform_l3: epsilon must be +-1");
    if (form.count() >= 1 && form.a[1] != 1)
        throw std::domain_error("newform_l3: coefficients must be normalized, a(1) = 1");
    const long wb = ctx.working_bits;
    const long n = form.level;

    Real pi = nk::const_pi(ctx);
    Real sqrt_n = sqrt(Real::of_long(n, wb));
    Real step = 2 * pi / sqrt_n;  // c_k = step * k
    Real amp = pow_ui(2 * pi, 3) / (2 * Real::of_long(n, wb) * sqrt_n);  // (2pi)^3/(2 N^(3/2))
    const double step_d = step.to_double();
    const double amp_ln = std::log(amp.to_double());
    const double ln2 = 0.6931471805599453;

    Real acc(wb);
    for (long k = 1;; ++k) {
        // term bound via |a(k)| <= sigma_1(k) <= k(1 + ln k)
        const double c = step_d * static_cast<double>(k);
        const double lnk = std::log(static_cast<double>(k));
        const double sig_ln = lnk + std::log1p(lnk);
        const double part1_ln = -c + std::log(c * c + 2 * c + 2) - ln2 - 3.0 * lnk;
        const double part2_ln = amp_ln - c - std::log(c);
        const double bound_ln = sig_ln + std::max(part1_ln, part2_ln) + ln2;
        const double acc_ln =
            acc.is_zero() ? 0.0 : static_cast<double>(acc.exponent2()) * ln2;
        if (bound_ln < acc_ln - (wb + 10) * ln2) break;
        if (k > form.count())
            throw InsufficientCoefficients(
                "newform_l3: need coefficients up to k = " +
                    std::to_string(required_terms(n, ctx)) + " for " +
                    std::to_string(ctx.target_digits) + " digits, have " +
                    std::to_string(form.count()),
                required_terms(n, ctx));
        if (form.a[static_cast<size_t>(k)] == 0) continue;
        Real ck = step * k;
        Real g3 = nk::upper_incomplete_gamma(3, ck, ctx);  // e^-c (c^2+2c+2)
        Real e1 = nk::upper_incomplete_gamma(0, ck, ctx);  // E1(c)
        Real term = g3 / (2 * pow_ui(Real::of_long(k, wb), 3));
        if (form.epsilon > 0)
            term += amp * e1;
        else
            term -= amp * e1;
        acc += term * Real::of_long(static_cast<long>(form.a[static_cast<size_t>(k)]), wb);
    }
    acc.check_finite("newform_l3");
    Real err = mul_2si(abs(acc) + 1, -(wb - 12));
    return LValue{acc, "L(" + form.label + ",3)", "smoothed-afe", err};
}

Real lprime0_from_l3(long level, const Real& l3, int epsilon, const PrecisionContext& ctx) {
    if (epsilon != +1)
        throw UnsupportedSign("lprime0_from_l3: only the + functional-equation sign is defined");
    const long wb = ctx.working_bits;
    Real sqrt_n = sqrt(Real::of_long(level, wb));
    Real ratio = sqrt_n / (2 * nk::const_pi(ctx));
    return 2 * pow_ui(ratio, 3) * l3;
}

LValue lprime0(const QExpansion& form, const PrecisionContext& ctx) {
    LValue l3 = newform_l3(form, ctx);
    Real v = lprime0_from_l3(form.level, l3.value, form.epsilon, ctx);
    Real err = mul_2si(abs(v) + 1, -(ctx.working_bits - 12));
    return LValue{v, "L'(" + form.label + ",0)", l3.method + "+fricke", err};
}

Real eisenstein_kronecker(const Rational& re, const Rational& im_sq, int j, int target_digits,
                          double* err_out) {
    if (j != 2 && j != 3 && j != 4) throw std::domain_error("eisenstein_kronecker: j in {2,3,4}");
    const double x = re.get_d();
    const double y = std::sqrt(im_sq.get_d());
    const double t_min = (j == 4) ? 0.5 : (j == 3 ? 1.0 / std::sqrt(3.0) : 1.0 / std::sqrt(2.0));
    if (y < t_min - 1e-12)
        throw std::domain_error("eisenstein_kronecker: Im(tau) below the admissible strip");
    const double pi3 = M_PI * M_PI * M_PI;
    const double pref =
        (j == 4) ? 2.0 * y / pi3 : (j == 3 ? 15.0 * y / (4.0 * pi3) : 10.0 * y / pi3);
    const double jj = static_cast<double>(j) * j;
    const double tol = 0.5 * std::pow(10.0, -target_digits);

    auto box_sums = [&](long R, double& s_half, double& s_full) {
        // one pass over the 2R box, collecting the R sub-box on the way
        double acc_h = 0, c_h = 0, acc_f = 0, c_f = 0;
        auto kadd = [](double& s, double& comp, double v) {
            double yv = v - comp;
            double t = s + yv;
            comp = (t - s) - yv;
            s = t;
        };
        for (long m = -2 * R; m <= 2 * R; ++m) {
            const double u1m = m * x;
            const double v1 = m * y, v1s = v1 * v1;
            const double ujm = j * m * x;
            const double vj = j * m * y, vjs = vj * vj;
            const bool m_in = (m >= -R && m <= R);
            for (long n = -2 * R; n <= 2 * R; ++n) {
                if (m == 0 && n == 0) continue;
                const double u1 = u1m + n;
                const double d1 = u1 * u1 + v1s;
                const double uj = ujm + n;
                const double dj = uj * uj + vjs;
                const double inner = -(4.0 * u1 * u1 / (d1 * d1 * d1) - 1.0 / (d1 * d1)) +
                                     jj * (4.0 * uj * uj / (dj * dj * dj) - 1.0 / (dj * dj));
                kadd(acc_f, c_f, inner);
                if (m_in && n >= -R && n <= R) kadd(acc_h, c_h, inner);
            }
        }
        s_half = acc_h;
        s_full = acc_f;
    };

    double prev_value = 0;
    bool have_prev = false;
    for (long R = 512; R <= 20000; R *= 2) {
        double s1 = 0, s2 = 0;
        box_sums(R, s1, s2);
        // box tail ~ c/R^2: one Richardson elimination on R, 2R
        const double value = pref * (s2 + (s2 - s1) / 3.0);
        double err = pref * std::fabs(s2 - s1) / 3.0 * 0.5 + 1e-12;
        if (have_prev) err = std::max(err * 0.25, std::fabs(value - prev_value) * 0.5);
        if (err < tol * std::max(1.0, std::fabs(value))) {
            if (err_out) *err_out = err;
            return Real::of_double(value, 64);
        }
        prev_value = value;
        have_prev = true;
    }
    throw PrecisionUnreachable("eisenstein_kronecker: R cap of 2e4 reached before " +
                               std::to_string(target_digits) + " digits");
}

} // namespace ml::lseries
