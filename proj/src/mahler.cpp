// mahler.cpp -- hypergeometric route, G-series route, Q_k composition, and
// the QMC integration oracle.

#include "mahlerlab/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/numkernel.hpp"

namespace ml::mahler {

namespace nk = ml::numkernel;
using qseries::Nome;

namespace {

struct FamilyInfo {
    long hyper_min;    // |k| threshold of the hypergeometric identity
    long series_num;   // numerator of the argument: num/k
    long prefactor;    // f = Re(log k - (prefactor/k) 5F4(...))
    int s_level;       // matching modular parameter
    long s_boundary;   // value of s_level at the admissible-strip edge
};

FamilyInfo info(Family f) {
    switch (f) {
        case Family::F2: return {64, 64, 8, 2, 64};
        case Family::F3: return {128, 108, 12, 3, 108};
        case Family::F4: return {256, 256, 24, 4, 256};
    }
    throw std::logic_error("family");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::F2: return "f2";
        case Family::F3: return "f3";
        case Family::F4: return "f4";
    }
    return "?";
}

Real abs_err_default(const Real& v, long wb, int shift = 8) {
    return mul_2si(abs(v) + 1, -(wb - shift));
}

} // namespace

hyper::HyperParams family_params(Family f) {
    auto two = Rational(2);
    switch (f) {
        case Family::F2:
            return {{Rational(3, 2), Rational(3, 2), Rational(3, 2), Rational(1), Rational(1)},
                    {two, two, two, two}};
        case Family::F3:
            return {{Rational(4, 3), Rational(3, 2), Rational(5, 3), Rational(1), Rational(1)},
                    {two, two, two, two}};
        case Family::F4:
            return {{Rational(5, 4), Rational(3, 2), Rational(7, 4), Rational(1), Rational(1)},
                    {two, two, two, two}};
    }
    throw std::logic_error("family");
}

MeasureResult f_hyper(Family f, const Rational& k, const PrecisionContext& ctx) {
    const FamilyInfo fi = info(f);
    const long wb = ctx.working_bits;
    Rational abs_k = k >= 0 ? k : Rational(-k);
    if (abs_k < fi.hyper_min)
        throw std::domain_error(std::string(family_name(f)) + ": hypergeometric route needs |k| >= " +
                                std::to_string(fi.hyper_min));
    Rational x = Rational(fi.series_num) / k;
    x.canonicalize();
    Rational coef = Rational(fi.prefactor) / k;  // sign folds in for k < 0
    coef.canonicalize();
    Real log_k = log(Real::of_rational(abs_k, wb));

    if (x == 1 || x == -1) {
        int achieved = 0;
        Real series = hyper::pfq_unit(family_params(f), x > 0 ? +1 : -1, ctx, &achieved);
        Real v = log_k - Real::of_rational(coef, wb) * series;
        Real err = (abs(v) + 1) * pow(Real::of_long(10, wb), Real::of_long(-achieved, wb));
        return {v, "hyper-unit", err, std::nullopt};
    }
    Real series = hyper::pfq(family_params(f), x, ctx);
    Real v = log_k - Real::of_rational(coef, wb) * series;
    v.check_finite("f_hyper");
    return {v, "hyper-series", abs_err_default(v, wb), std::nullopt};
}

MeasureResult f_gseries(Family f, const Nome& q, const PrecisionContext& ctx) {
    const FamilyInfo fi = info(f);
    const long wb = ctx.working_bits;
    if (q.sign < 0) throw std::domain_error("f_gseries: nome must be positive");
    Real qb = qseries::nome_boundary(fi.s_level, ctx);
    if (q.magnitude > qb * (Real::of_long(1, wb) + mul_2si(Real::of_long(1, wb), -(wb / 2))))
        throw std::domain_error("f_gseries: nome outside the admissible strip Im(tau) >= t_min");

    Real g1 = qseries::g_series(q, ctx);
    Real v(wb);
    switch (f) {
        case Family::F2: {
            Real g4 = qseries::g_series(Nome(pow_ui(q.magnitude, 4), 1), ctx);
            v = (-g1 + 4 * g4) / 15;
            break;
        }
        case Family::F3: {
            Real g3 = qseries::g_series(Nome(pow_ui(q.magnitude, 3), 1), ctx);
            v = (-g1 + 3 * g3) / 8;
            break;
        }
        case Family::F4: {
            Real g2 = qseries::g_series(Nome(q.magnitude * q.magnitude, 1), ctx);
            v = (-g1 + 2 * g2) / 3;
            break;
        }
    }
    v.check_finite("f_gseries");
    MeasureResult r{v, "gseries", abs_err_default(v, wb), std::nullopt};
    r.s_of_q = qseries::s_level(fi.s_level, q, ctx);
    return r;
}

MeasureResult f_at_k(Family f, const Rational& k, const PrecisionContext& ctx) {
    const FamilyInfo fi = info(f);
    const long wb = ctx.working_bits;
    Rational abs_k = k >= 0 ? k : Rational(-k);
    const bool series_ok = (k >= fi.s_boundary);
    const bool hyper_ok = (abs_k >= fi.hyper_min);
    if (!series_ok && !hyper_ok)
        throw UnroutableArgument(std::string(family_name(f)) + ": k = " + k.get_str() +
                                 " outside both the nome route (k >= " +
                                 std::to_string(fi.s_boundary) + ") and the hypergeometric route " 
                                 "(|k| >= " + std::to_string(fi.hyper_min) + ")");

    std::optional<MeasureResult> series_res, hyper_res;
    if (series_ok) {
        Nome q = qseries::invert_s(fi.s_level, Real::of_rational(k, wb), ctx);
        series_res = f_gseries(f, q, ctx);
    }
    if (hyper_ok) {
        if (series_ok) {
            // cross-check role only: a unit-argument acceleration that cannot
            // reach the full target still confirms the nome route at its own
            // accuracy
            try {
                hyper_res = f_hyper(f, k, ctx);
            } catch (const AccelerationStagnation&) {
                hyper_res = f_hyper(f, k, PrecisionContext::digits(std::min(ctx.target_digits, 16)));
            }
        } else {
            hyper_res = f_hyper(f, k, ctx);
        }
    }

    if (series_res && hyper_res) {
        Real gap = abs(series_res->value - hyper_res->value);
        Real budget = 32 * (series_res->error_estimate + hyper_res->error_estimate);
        if (gap > budget)
            throw std::runtime_error(std::string(family_name(f)) +
                                     ": route disagreement at k = " + k.get_str() + " (gap " +
                                     gap.str(3) + ", budget " + budget.str(3) + ")");
        series_res->route = "gseries+hyper-agree";
        return *series_res;
    }
    return series_res ? *series_res : *hyper_res;
}

MeasureResult qk_mahler(const Rational& z, const PrecisionContext& ctx) {
    if (z == 0) throw UnroutableArgument("qk_mahler: z = 0 has no composition arguments");
    const long wb = ctx.working_bits;
    Rational k1 = Rational(16 - z) * (16 - z) * (16 - z) / (z * z);
    Rational k2 = Rational(-(4 - z)) * (4 - z) * (4 - z) / z;
    k1.canonicalize();
    k2.canonicalize();

    auto f3_of = [&](const Rational& arg, const char* which) -> MeasureResult {
        if (arg == 0)
            return {Real(wb), "f3(0):=0", Real(wb), std::nullopt};
        try {
            return f_at_k(Family::F3, arg, ctx);
        } catch (const UnroutableArgument& e) {
            throw UnroutableArgument("qk_mahler: " + std::string(which) + " argument " +
                                     arg.get_str() + " unroutable: " + e.what());
        }
    };
    MeasureResult m1 = f3_of(k1, "first");
    MeasureResult m2 = f3_of(k2, "second");
    Real v = -(m1.value) / 15 + m2.value * 8 / 15;
    v.check_finite("qk_mahler");
    return {v, "qk(f3-composition)", m1.error_estimate / 15 + m2.error_estimate * 8 / 15,
            std::nullopt};
}

// ---------------------------------------------------------------------------
// QMC integration

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double u01(uint64_t v) { return static_cast<double>(v >> 11) * 0x1.0p-53; }

struct Integrand {
    IntegralSpec spec;

    double operator()(const double* u) const {
        constexpr double two_pi = 6.283185307179586476925286766559;
        switch (spec.kind) {
            case IntegralSpec::Kind::Smyth: {
                const double a = two_pi * u[0], b = two_pi * u[1];
                const double re = 1.0 + std::cos(a) + std::cos(b);
                const double im = std::sin(a) + std::sin(b);
                return 0.5 * std::log(re * re + im * im);
            }
            case IntegralSpec::Kind::F2: {
                const double c = 8.0 * std::cos(two_pi * u[0]) * std::cos(two_pi * u[1]) *
                                 std::cos(two_pi * u[2]);
                if (spec.k >= 0) return std::log(std::fabs(c + spec.root_sign * std::sqrt(spec.k)));
                return 0.5 * std::log(c * c - spec.k);
            }
            case IntegralSpec::Kind::F3: {
                const double c1 = std::cos(two_pi * u[0]), c2 = std::cos(two_pi * u[1]);
                const double w = std::cos(M_PI * u[2]);
                const double amp = 64.0 * c1 * c1 * c2 * c2 * w * w * w;
                return 0.5 * std::log(amp * amp - 2.0 * amp * spec.k * w + spec.k * spec.k);
            }
            case IntegralSpec::Kind::F4: {
                const double a = two_pi * u[0], b = two_pi * u[1], c = two_pi * u[2];
                std::complex<double> p = std::polar(1.0, 4 * a) + std::polar(1.0, 4 * b) +
                                         std::polar(1.0, 4 * c) + 1.0;
                std::complex<double> root =
                    spec.k >= 0 ? std::complex<double>(spec.root_sign * std::pow(spec.k, 0.25), 0.0)
                                : std::polar(std::pow(-spec.k, 0.25), M_PI / 4);
                p += root * std::polar(1.0, a + b + c);
                return 0.5 * std::log(std::norm(p));
            }
            case IntegralSpec::Kind::Qk: {
                // the 12-monomial family x + 1/x + y + 1/y + z + 1/z + xy
                // + 1/(xy) + yz + 1/(yz) + xyz + 1/(xyz) - k; adding the
                // xz pair breaks the proven k = 0 and k = 12 values
                const double a = two_pi * u[0], b = two_pi * u[1], c = two_pi * u[2];
                const double s = 2.0 * (std::cos(a) + std::cos(b) + std::cos(c) + std::cos(a + b) +
                                        std::cos(b + c) + std::cos(a + b + c));
                return std::log(std::fabs(s - spec.k));
            }
        }
        return 0;
    }
};

double family_prefactor(IntegralSpec::Kind k) {
    switch (k) {
        case IntegralSpec::Kind::F2: return 2;
        case IntegralSpec::Kind::F4: return 4;
        default: return 1;
    }
}

} // namespace

MeasureResult mahler_integral(const IntegralSpec& spec, long samples, unsigned long seed) {
    if (samples < 10000) throw std::domain_error("mahler_integral: samples must be >= 1e4");
    const int batches = 16;
    const long n = (samples + batches - 1) / batches;
    Integrand f{spec};

    // rank-1 lattice generator (1, a, a^2 mod n), golden-section multiplier
    uint64_t a = static_cast<uint64_t>(0.38196601125010515 * static_cast<double>(n));
    if (a < 2) a = 2;
    while (std::gcd(static_cast<long>(a), n) != 1) ++a;
    const uint64_t nn = static_cast<uint64_t>(n);
    const uint64_t a2 = static_cast<uint64_t>((static_cast<unsigned __int128>(a) * a) % nn);

    std::vector<double> means(batches);
    for (int bidx = 0; bidx < batches; ++bidx) {
        uint64_t rng = seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(bidx) + 1;
        double shift[3] = {u01(splitmix64(rng)), u01(splitmix64(rng)), u01(splitmix64(rng))};
        double acc = 0, comp = 0;
        uint64_t idx1 = 0, idx2 = 0;  // i*a mod n, i*a^2 mod n
        for (long i = 0; i < n; ++i) {
            double u[3];
            u[0] = static_cast<double>(i) / static_cast<double>(n) + shift[0];
            u[0] -= std::floor(u[0]);
            u[1] = static_cast<double>(idx1) / static_cast<double>(n) + shift[1];
            u[1] -= std::floor(u[1]);
            u[2] = static_cast<double>(idx2) / static_cast<double>(n) + shift[2];
            u[2] -= std::floor(u[2]);

            double v = f(u);
            for (int attempt = 1; !std::isfinite(v) && attempt <= 8; ++attempt) {
                // deterministic jitter off the singular set
                double w[3];
                for (int d = 0; d < 3; ++d) {
                    w[d] = u[d] + attempt * 0x1.0p-35;
                    w[d] -= std::floor(w[d]);
                }
                v = f(w);
            }
            if (std::isfinite(v)) {
                double yv = v - comp;
                double t = acc + yv;
                comp = (t - acc) - yv;
                acc = t;
            }
            idx1 += a;
            if (idx1 >= nn) idx1 -= nn;
            idx2 += a2;
            if (idx2 >= nn) idx2 -= nn;
        }
        means[static_cast<size_t>(bidx)] = acc / static_cast<double>(n);
    }

    std::vector<double> sorted = means;
    std::sort(sorted.begin(), sorted.end());
    const double med = 0.5 * (sorted[7] + sorted[8]);
    std::vector<double> dev(means.size());
    for (size_t i = 0; i < means.size(); ++i) dev[i] = std::fabs(means[i] - med);
    std::sort(dev.begin(), dev.end());
    const double mad = 0.5 * (dev[7] + dev[8]);
    const double sigma = 1.4826 * mad;
    const double stderr_med = std::max(1.2533 * sigma / std::sqrt(16.0), 1e-9);

    const double pref = family_prefactor(spec.kind);
    return {Real::of_double(pref * med, 64), "integral-qmc",
            Real::of_double(pref * stderr_med, 64), std::nullopt};
}

} // namespace ml::mahler
