// mahlerlab.cpp -- command-line front end.
//
//   mahlerlab verify run  [--id ID | --filter GROUP] [--digits N]
//                         [--coeff-file PATH ...] [--json OUT] [--self-check]
//                         [--stable-output] [--samples N] [--seed R] [--jobs J]
//   mahlerlab verify list
//   mahlerlab eval      --quantity Q --args ... [--digits N] [--coeff-file ...]
//   mahlerlab coeffs    --form LABEL --count M [--out PATH]
//   mahlerlab integrate --family F [--k K] [--samples S] [--seed R] [--root-sign +-1]
//
// exit codes: 0 all verified/skipped, 1 any failure, 2 usage error

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "mahlerlab/errors.hpp"
#include "mahlerlab/numkernel.hpp"
#include "mahlerlab/verify.hpp"

namespace {

using namespace ml;

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void load_coeff_files(const std::vector<std::string>& paths, verify::RunOptions& opt) {
    for (const auto& p : paths) {
        std::vector<std::string> warnings;
        auto q = verify::ingest_coeffs(p, &warnings);
        for (const auto& w : warnings) std::fprintf(stderr, "warning: %s: %s\n", p.c_str(), w.c_str());
        std::fprintf(stderr, "loaded %s: form %s, level %ld, %ld coefficients\n", p.c_str(),
                     q.label.c_str(), q.level, q.count());
        opt.coefficients[q.label] = std::move(q);
    }
}

int cmd_verify_run(const std::string& id, const std::string& filter, int digits,
                   const std::vector<std::string>& coeff_files, const std::string& json_out,
                   verify::RunOptions opt) {
    load_coeff_files(coeff_files, opt);
    std::vector<verify::VerificationReport> reports;
    if (!id.empty()) {
        reports.push_back(verify::run_identity(id, digits, opt));
    } else {
        auto sum = verify::run_all(digits, filter, opt);
        reports = std::move(sum.reports);
    }

    int exit_code = 0;
    for (const auto& r : reports) {
        if (r.status == verify::ReportStatus::Failed) exit_code = 1;
        std::printf("%-14s %-20s digits %3d / %-3d %6ld ms  %s\n", r.id.c_str(),
                    verify::status_name(r.status), r.digits_agreed, r.target_digits, r.runtime_ms,
                    r.paper_anchor.c_str());
    }
    std::printf("%zu identities, exit %d\n", reports.size(), exit_code);

    if (!json_out.empty()) {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (json_out != "-") {
            file.open(json_out);
            if (!file) {
                std::fprintf(stderr, "cannot write %s\n", json_out.c_str());
                return 2;
            }
            os = &file;
        }
        for (const auto& r : reports) (*os) << verify::report_json(r) << "\n";
    }
    return exit_code;
}

int cmd_verify_list() {
    for (const auto& s : verify::registry())
        std::printf("%-14s %-10s %-12s default %2d digits (cap %3d)  %s\n", s.id.c_str(),
                    s.group.c_str(), s.status == verify::ProofStatus::Proved ? "proved" : "conjectural",
                    s.default_digits, s.max_digits, s.paper_anchor.c_str());
    return 0;
}

int cmd_eval(const std::string& quantity, const std::string& args, int digits,
             const std::vector<std::string>& coeff_files) {
    auto ctx = PrecisionContext::digits(digits);
    verify::RunOptions opt;
    load_coeff_files(coeff_files, opt);

    auto resolve = [&](const std::string& label) -> lseries::QExpansion {
        if (lseries::find_builtin(label))
            return lseries::builtin_coeffs(label, lseries::required_terms(
                                                      lseries::find_builtin(label)->level, ctx));
        auto it = opt.coefficients.find(label);
        if (it == opt.coefficients.end())
            throw std::invalid_argument("unknown form '" + label + "' (no builtin, no file)");
        return it->second;
    };

    Real value(ctx.working_bits);
    if (quantity == "L3") {
        value = lseries::newform_l3(resolve(args), ctx).value;
    } else if (quantity == "Lprime0") {
        value = lseries::lprime0(resolve(args), ctx).value;
    } else if (quantity == "dirichlet") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("dirichlet needs --args D,s");
        value = lseries::dirichlet_l(std::stol(parts[0]), std::stol(parts[1]), ctx).value;
    } else if (quantity == "pfq") {
        auto groups = split(args, ';');
        if (groups.size() != 3) throw std::invalid_argument("pfq needs --args a1,..;b1,..;x");
        hyper::HyperParams p;
        for (const auto& a : split(groups[0], ',')) p.upper.push_back(parse_rational(a));
        for (const auto& b : split(groups[1], ',')) p.lower.push_back(parse_rational(b));
        Rational x = parse_rational(groups[2]);
        if (x == 1 || x == -1)
            value = hyper::pfq_unit(p, x > 0 ? +1 : -1, ctx);
        else
            value = hyper::pfq(p, x, ctx);
    } else if (quantity == "f2" || quantity == "f3" || quantity == "f4") {
        auto fam = quantity == "f2" ? mahler::Family::F2
                                    : (quantity == "f3" ? mahler::Family::F3 : mahler::Family::F4);
        auto r = mahler::f_at_k(fam, parse_rational(args), ctx);
        std::fprintf(stderr, "route: %s\n", r.route.c_str());
        value = r.value;
    } else if (quantity == "qk") {
        value = mahler::qk_mahler(parse_rational(args), ctx).value;
    } else if (quantity == "s2" || quantity == "s3" || quantity == "s4") {
        int level = quantity[1] - '0';
        if (args.rfind("tau2=", 0) == 0) {
            auto q = qseries::nome_of(qseries::CMPoint::imag(parse_rational(args.substr(5))), ctx);
            value = qseries::s_level(level, q, ctx);
        } else {
            value = qseries::s_level(level, qseries::Nome(Real::of_string(args, ctx.working_bits), 1),
                                     ctx);
        }
    } else if (quantity == "G") {
        Real q = Real::of_string(args, ctx.working_bits);
        int sign = q.sign() < 0 ? -1 : 1;
        value = qseries::g_series(qseries::Nome(abs(q), sign), ctx);
    } else {
        throw std::invalid_argument("unknown quantity '" + quantity + "'");
    }
    std::printf("%s\n", value.str(digits).c_str());
    return 0;
}

int cmd_coeffs(const std::string& form, long count, const std::string& out) {
    auto q = lseries::builtin_coeffs(form, count);
    if (out.empty()) {
        std::printf("# %s %ld 3 %ld %d\n", q.label.c_str(), q.level, q.char_d, q.epsilon);
        for (long k = 1; k <= q.count(); ++k)
            std::printf("%ld %lld\n", k, q.a[static_cast<size_t>(k)]);
    } else {
        verify::write_coeff_file(q, out);
        std::fprintf(stderr, "wrote %s (%ld coefficients)\n", out.c_str(), q.count());
    }
    return 0;
}

int cmd_integrate(const std::string& family, const std::string& k, long samples,
                  unsigned long seed, int root_sign) {
    mahler::IntegralSpec spec;
    spec.root_sign = root_sign;
    if (family == "smyth") {
        spec.kind = mahler::IntegralSpec::Kind::Smyth;
    } else {
        if (k.empty()) throw std::invalid_argument("--k is required for family " + family);
        spec.k = parse_rational(k).get_d();
        if (family == "f2")
            spec.kind = mahler::IntegralSpec::Kind::F2;
        else if (family == "f3")
            spec.kind = mahler::IntegralSpec::Kind::F3;
        else if (family == "f4")
            spec.kind = mahler::IntegralSpec::Kind::F4;
        else if (family == "qk")
            spec.kind = mahler::IntegralSpec::Kind::Qk;
        else
            throw std::invalid_argument("unknown family '" + family + "'");
    }
    auto r = mahler::mahler_integral(spec, samples, seed);
    std::printf("estimate %.10f  stat-error %.2e  (%ld samples, seed %lu)\n", r.value.to_double(),
                r.error_estimate.to_double(), samples, seed);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-variable Mahler measures and modular L-value identities"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run or list the identity registry");
    verify_cmd->require_subcommand(1);
    auto* run_cmd = verify_cmd->add_subcommand("run", "evaluate identities and certify agreement");
    std::string id, filter, json_out;
    int digits = 0;
    std::vector<std::string> coeff_files;
    verify::RunOptions opt;
    opt.jobs = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    run_cmd->add_option("--id", id, "single identity id");
    run_cmd->add_option("--filter", filter, "group, id prefix, or proved/conjectural");
    run_cmd->add_option("--digits", digits, "requested digits (0 = per-identity default)");
    run_cmd->add_option("--coeff-file", coeff_files, "coefficient file(s) for non-builtin forms");
    run_cmd->add_option("--json", json_out, "write one JSON report per line ('-' for stdout)");
    run_cmd->add_option("--samples", opt.samples, "QMC samples for integral identities");
    run_cmd->add_option("--seed", opt.seed, "QMC seed");
    run_cmd->add_option("--jobs", opt.jobs, "worker threads");
    run_cmd->add_flag("--self-check", opt.self_check, "recompute at doubled precision");
    run_cmd->add_flag("--stable-output", opt.stable_output, "zero runtime_ms for diffable output");
    auto* list_cmd = verify_cmd->add_subcommand("list", "print the registry");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a single quantity");
    std::string quantity, args_str;
    int eval_digits = 30;
    std::vector<std::string> eval_coeffs;
    eval_cmd->add_option("--quantity", quantity,
                         "L3|Lprime0|dirichlet|pfq|f2|f3|f4|qk|s2|s3|s4|G")
        ->required();
    eval_cmd->add_option("--args", args_str, "quantity arguments")->required();
    eval_cmd->add_option("--digits", eval_digits, "decimal digits");
    eval_cmd->add_option("--coeff-file", eval_coeffs, "coefficient file(s)");

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "emit builtin coefficient files");
    std::string form_label, coeff_out;
    long count = 100;
    coeffs_cmd->add_option("--form", form_label, "builtin form label")->required();
    coeffs_cmd->add_option("--count", count, "number of coefficients");
    coeffs_cmd->add_option("--out", coeff_out, "output path (default stdout)");

    // integrate
    auto* int_cmd = app.add_subcommand("integrate", "QMC torus integration");
    std::string family, k_str;
    long samples = 1000000;
    unsigned long seed = 424242;
    int root_sign = +1;
    int_cmd->add_option("--family", family, "f2|f3|f4|qk|smyth")->required();
    int_cmd->add_option("--k", k_str, "family parameter");
    int_cmd->add_option("--samples", samples, "sample budget");
    int_cmd->add_option("--seed", seed, "deterministic seed");
    int_cmd->add_option("--root-sign", root_sign, "+1 or -1 root choice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_verify_run(id, filter, digits, coeff_files, json_out, opt);
        if (list_cmd->parsed()) return cmd_verify_list();
        if (eval_cmd->parsed()) return cmd_eval(quantity, args_str, eval_digits, eval_coeffs);
        if (coeffs_cmd->parsed()) return cmd_coeffs(form_label, count, coeff_out);
        if (int_cmd->parsed()) return cmd_integrate(family, k_str, samples, seed, root_sign);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
