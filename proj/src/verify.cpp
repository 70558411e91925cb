// verify.cpp -- certification engine, coefficient ingestion, reports.

#include "mahlerlab/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mahlerlab/errors.hpp"

namespace ml::verify {

namespace {

// raised when an identity references a form with no coefficient data
struct MissingFormData : std::runtime_error {
    explicit MissingFormData(const std::string& form)
        : std::runtime_error("no coefficient data for form '" + form + "'"), label(form) {}
    std::string label;
};

struct TermValue {
    Real value;
    std::string method;
    Real err;
    bool high_precision;
};

lseries::QExpansion resolve_form(const std::string& label, const PrecisionContext& ctx,
                                 const RunOptions& opt) {
    if (const auto* bf = lseries::find_builtin(label))
        return lseries::builtin_coeffs(label, lseries::required_terms(bf->level, ctx));
    auto it = opt.coefficients.find(label);
    if (it == opt.coefficients.end()) throw MissingFormData(label);
    return it->second;
}

TermValue eval_term(const TermKind& kind, const PrecisionContext& ctx, const RunOptions& opt) {
    const long wb = ctx.working_bits;
    return std::visit(
        [&](const auto& t) -> TermValue {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, TermMeasure>) {
                auto r = mahler::f_at_k(t.family, t.k, ctx);
                return {r.value, "f_at_k[" + r.route + "]", r.error_estimate, true};
            } else if constexpr (std::is_same_v<T, TermQk>) {
                auto r = mahler::qk_mahler(t.z, ctx);
                return {r.value, "qk[f3-composition]", r.error_estimate, true};
            } else if constexpr (std::is_same_v<T, TermSj>) {
                auto q = qseries::nome_of(qseries::CMPoint::imag(t.im_sq), ctx);
                Real v = qseries::s_level(t.level, q, ctx);
                return {v, "s_j[eta]", mul_2si(abs(v) + 1, -(wb - 8)), true};
            } else if constexpr (std::is_same_v<T, TermPfq>) {
                Real v = hyper::pfq(t.params, t.x, ctx);
                return {v, "pfq[series]", mul_2si(abs(v) + 1, -(wb - 8)), true};
            } else if constexpr (std::is_same_v<T, TermPfqUnit>) {
                int achieved = 0;
                Real v = hyper::pfq_unit(t.params, t.sign, ctx, &achieved);
                Real err =
                    (abs(v) + 1) * pow(Real::of_long(10, wb), Real::of_long(-achieved, wb));
                return {v, "pfq[levin-u~" + std::to_string(achieved) + "d]", err, true};
            } else if constexpr (std::is_same_v<T, TermLPrime0>) {
                auto form = resolve_form(t.form, ctx, opt);
                auto lv = lseries::lprime0(form, ctx);
                return {lv.value, "lseries[smoothed-afe+fricke:" + t.form + "]",
                        lv.error_estimate, true};
            } else if constexpr (std::is_same_v<T, TermLChiPrime>) {
                auto lv = lseries::dirichlet_lprime_minus1(t.d, ctx);
                return {lv.value, "lseries[hurwitz,fe]", lv.error_estimate, true};
            } else if constexpr (std::is_same_v<T, TermLogRat>) {
                if (!(t.arg > 0)) throw std::domain_error("log term needs a positive argument");
                Real v = log(Real::of_rational(t.arg, wb));
                return {v, "log", mul_2si(abs(v) + 1, -(wb - 4)), true};
            } else if constexpr (std::is_same_v<T, TermLProduct>) {
                Real v = Real::of_long(1, wb);
                for (auto& [d, s] : t.factors) v *= lseries::dirichlet_l(d, s, ctx).value;
                return {v, "lseries[hurwitz]", mul_2si(abs(v) + 1, -(wb - 8)), true};
            } else if constexpr (std::is_same_v<T, TermEpstein>) {
                double err = 0;
                int digits = std::min(ctx.target_digits + 1, 10);
                Real v = lattice::epstein_sum(t.q, t.t, digits, &err);
                return {v, "lattice[epstein]", Real::of_double(err, 64), false};
            } else if constexpr (std::is_same_v<T, TermEk>) {
                double err = 0;
                int digits = std::min(ctx.target_digits + 1, 6);
                Real v = lseries::eisenstein_kronecker(t.re, t.im_sq, t.j, digits, &err);
                return {v, "ek[double-sum]", Real::of_double(err, 64), false};
            } else if constexpr (std::is_same_v<T, TermGMeasure>) {
                auto q = qseries::nome_of(qseries::CMPoint::imag(t.im_sq), ctx);
                auto r = mahler::f_gseries(t.family, q, ctx);
                return {r.value, "gseries[direct-tau]", r.error_estimate, true};
            } else if constexpr (std::is_same_v<T, TermIntegral>) {
                auto r = mahler::mahler_integral(t.spec, opt.samples, opt.seed);
                return {Real(r.value), "qmc[rank1-median]", r.error_estimate, false};
            } else {
                static_assert(std::is_same_v<T, TermExact>);
                return {Real::of_integer(t.n, wb), "exact", Real(wb), true};
            }
        },
        kind);
}

void join_method(std::string& dst, const std::string& tag) {
    if (dst.find(tag) != std::string::npos) return;
    if (!dst.empty()) dst += "+";
    dst += tag;
}

} // namespace

SideValue eval_side(const LinComb& c, const PrecisionContext& ctx, const RunOptions& opt) {
    SideValue out{Real(ctx.working_bits), "", Real(ctx.working_bits), true};
    for (const auto& term : c) {
        TermValue tv = eval_term(term.kind, ctx, opt);
        Real coef = Real::of_rational(term.coef, ctx.working_bits);
        out.value += coef * tv.value;
        out.error_estimate += abs(coef) * tv.err;
        join_method(out.method, tv.method);
        out.high_precision = out.high_precision && tv.high_precision;
    }
    out.value.check_finite("eval_side");
    return out;
}

const IdentitySpec* find_identity(const std::string& id) {
    for (const auto& s : registry())
        if (s.id == id) return &s;
    return nullptr;
}

const char* status_name(ReportStatus s) {
    switch (s) {
        case ReportStatus::Verified: return "verified";
        case ReportStatus::Failed: return "failed";
        case ReportStatus::ConditionalSkipped: return "conditional-skipped";
    }
    return "?";
}

VerificationReport run_identity(const IdentitySpec& spec, int target_digits,
                                const RunOptions& opt) {
    VerificationReport rep;
    rep.id = spec.id;
    rep.paper_anchor = spec.paper_anchor;
    int target = target_digits > 0 ? target_digits : spec.default_digits;
    if (target > spec.max_digits) target = spec.max_digits;
    if (target < 1) target = 1;
    rep.target_digits = target;
    auto ctx = PrecisionContext::digits(target);
    rep.working_bits = ctx.working_bits;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        SideValue lhs = eval_side(spec.lhs, ctx, opt);
        SideValue rhs = eval_side(spec.rhs, ctx, opt);
        rep.digits_agreed = digits_agreed(lhs.value, rhs.value);
        const int out_digits =
            static_cast<int>(static_cast<double>(ctx.working_bits) * 0.30102999566398) + 1;
        rep.lhs = lhs.value.str(out_digits);
        rep.rhs = rhs.value.str(out_digits);
        rep.lhs_method = lhs.method;
        rep.rhs_method = rhs.method;
        rep.status = rep.digits_agreed >= target ? ReportStatus::Verified : ReportStatus::Failed;

        if (opt.self_check && lhs.high_precision && rhs.high_precision &&
            rep.status == ReportStatus::Verified) {
            auto ctx2 = ctx.doubled();
            SideValue lhs2 = eval_side(spec.lhs, ctx2, opt);
            SideValue rhs2 = eval_side(spec.rhs, ctx2, opt);
            if (digits_agreed(lhs.value, lhs2.value) < target ||
                digits_agreed(rhs.value, rhs2.value) < target) {
                rep.status = ReportStatus::Failed;
                rep.lhs_method += "+selfcheck-failed";
            }
        }
    } catch (const MissingFormData& e) {
        if (spec.status == ProofStatus::Conjectural) {
            rep.status = ReportStatus::ConditionalSkipped;
            rep.lhs_method = rep.rhs_method = "unavailable[" + e.label + "]";
        } else {
            throw;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.runtime_ms =
        opt.stable_output ? 0
                          : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

VerificationReport run_identity(const std::string& id, int target_digits, const RunOptions& opt) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw std::domain_error("run_identity: unknown identity '" + id + "'");
    return run_identity(*spec, target_digits, opt);
}

RunSummary run_all(int target_digits, const std::string& filter, const RunOptions& opt) {
    std::vector<const IdentitySpec*> picked;
    for (const auto& s : registry()) {
        if (!filter.empty()) {
            bool match = s.group == filter ||
                         (filter == "proved" && s.status == ProofStatus::Proved) ||
                         (filter == "conjectural" && s.status == ProofStatus::Conjectural) ||
                         s.id.rfind(filter, 0) == 0;
            if (!match) continue;
        }
        picked.push_back(&s);
    }
    RunSummary out;
    out.reports.resize(picked.size());

    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(picked.size())));
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= picked.size()) return;
            try {
                out.reports[i] = run_identity(*picked[i], target_digits, opt);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                out.reports[i].id = picked[i]->id;
                out.reports[i].paper_anchor = picked[i]->paper_anchor;
                out.reports[i].target_digits = target_digits;
                out.reports[i].status = ReportStatus::Failed;
                out.reports[i].lhs_method = std::string("error: ") + e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& r : out.reports)
        if (r.status == ReportStatus::Failed) out.exit_code = 1;
    return out;
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = status_name(r.status);
    j["digits_agreed"] = r.digits_agreed;
    j["target_digits"] = r.target_digits;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["lhs_method"] = r.lhs_method;
    j["rhs_method"] = r.rhs_method;
    j["runtime_ms"] = r.runtime_ms;
    j["working_bits"] = r.working_bits;
    j["paper_anchor"] = r.paper_anchor;
    return j.dump();
}

// ---- coefficient files ------------------------------------------------------

lseries::QExpansion ingest_coeffs(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw CoeffParseError("cannot open '" + path + "'", 0);
    lseries::QExpansion q;
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) throw CoeffParseError("empty file", 1);
    ++line_no;
    {
        std::istringstream hs(line);
        std::string hash;
        long weight = 0;
        if (!(hs >> hash >> q.label >> q.level >> weight >> q.char_d >> q.epsilon) || hash != "#")
            throw CoeffParseError("header must be '# label N 3 D epsilon'", line_no);
        if (weight != 3) throw CoeffParseError("only weight 3 is supported", line_no);
        if (q.level < 1) throw CoeffParseError("level must be positive", line_no);
        if (q.epsilon != 1 && q.epsilon != -1)
            throw CoeffParseError("epsilon must be +-1", line_no);
    }

    q.a.push_back(0);  // index 0 unused
    long expect_k = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long k = 0;
        long long ak = 0;
        if (!(ls >> k >> ak)) throw CoeffParseError("expected 'k a_k'", line_no);
        std::string extra;
        if (ls >> extra) throw CoeffParseError("trailing tokens after 'k a_k'", line_no);
        if (k != expect_k)
            throw CoeffParseError("coefficient index must be gap-free (expected " +
                                      std::to_string(expect_k) + ", got " + std::to_string(k) +
                                      ")",
                                  line_no);
        q.a.push_back(ak);
        ++expect_k;
    }
    if (q.count() < 1) throw CoeffParseError("no coefficients", line_no);
    if (q.a[1] != 1) throw CoeffParseError("normalization requires a(1) = 1", 2);

    if (warnings) {
        for (long k = 2; k <= 10; ++k)
            for (long l = k + 1; l <= 100 / k; ++l) {
                if (std::gcd(k, l) != 1 || k * l > q.count()) continue;
                if (q.a[static_cast<size_t>(k)] * q.a[static_cast<size_t>(l)] !=
                    q.a[static_cast<size_t>(k * l)])
                    warnings->push_back("multiplicativity violated at (" + std::to_string(k) +
                                        "," + std::to_string(l) +
                                        "): a(k)a(l) != a(kl); continuing");
            }
    }
    return q;
}

void write_coeff_file(const lseries::QExpansion& form, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# " << form.label << " " << form.level << " 3 " << form.char_d << " " << form.epsilon
        << "\n";
    for (long k = 1; k <= form.count(); ++k)
        out << k << " " << form.a[static_cast<size_t>(k)] << "\n";
}

} // namespace ml::verify
