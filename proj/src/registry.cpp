// registry.cpp -- the identity table: every verifiable equality, with exact
// rational coefficients on a fixed basis of evaluable quantities.  The right
// sides of the measure identities live on the L-value basis
// {L'(form,0), L'(chi_D,-1), log r}; the Fricke and odd-character
// functional-equation conversions make every printed coefficient rational.

#include "mahlerlab/verify.hpp"

namespace ml::verify {

namespace {

using mahler::Family;
using lattice::QuadForm;

Rational rat(long n, long d = 1) { return Rational(n, d); }

LinTerm measure(Family f, long k) { return {rat(1), TermMeasure{f, rat(k)}}; }
LinTerm lp0(const Rational& c, const char* form) { return {c, TermLPrime0{form}}; }
LinTerm lchi(const Rational& c, long d) { return {c, TermLChiPrime{d}}; }
LinTerm logr(const Rational& c, long arg_num, long arg_den = 1) {
    return {c, TermLogRat{rat(arg_num, arg_den)}};
}
LinTerm pfq_at(Family f, const Rational& x, const Rational& c = Rational(1)) {
    return {c, TermPfq{mahler::family_params(f), x}};
}
LinTerm pfq_one(Family f, int sign = +1) {
    return {rat(1), TermPfqUnit{mahler::family_params(f), sign}};
}
LinTerm qk(const Rational& c, long z) { return {c, TermQk{rat(z)}}; }
LinTerm sj(int level, const Rational& im_sq) { return {rat(1), TermSj{level, im_sq}}; }
LinTerm exact(long n) { return {rat(1), TermExact{Integer(n)}}; }
LinTerm lprod(const Rational& c, std::vector<std::pair<long, long>> factors) {
    return {c, TermLProduct{std::move(factors)}};
}
LinTerm epstein(const Rational& c, long a, long b, long cc) {
    return {c, TermEpstein{QuadForm{a, b, cc}, 2.0}};
}
LinTerm ek(int j, const Rational& im_sq) { return {rat(1), TermEk{j, rat(0), im_sq}}; }
LinTerm gmeasure(Family f, const Rational& im_sq) { return {rat(1), TermGMeasure{f, im_sq}}; }

IdentitySpec id_spec(std::string id, std::string group, ProofStatus st, std::string anchor,
                     int def_digits, int max_digits, LinComb lhs, LinComb rhs) {
    IdentitySpec s;
    s.id = std::move(id);
    s.group = std::move(group);
    s.status = st;
    s.paper_anchor = std::move(anchor);
    s.default_digits = def_digits;
    s.max_digits = max_digits;
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    return s;
}

std::vector<IdentitySpec> build() {
    std::vector<IdentitySpec> r;
    const auto P = ProofStatus::Proved;
    const auto C = ProofStatus::Conjectural;

    // ---- main theorem: eight measure identities -----------------------------
    r.push_back(id_spec("A64", "thm12", P, "thm-main/A:64", 25, 200,
                        {measure(Family::F2, 64)}, {lp0(rat(8), "h")}));
    r.push_back(id_spec("A256", "thm12", P, "thm-main/A:256", 25, 200,
                        {measure(Family::F2, 256)},
                        {lp0(rat(4, 3), "g48"), lchi(rat(8, 3), -4)}));
    r.push_back(id_spec("A216", "thm12", P, "thm-main/A:216", 25, 200,
                        {measure(Family::F3, 216)},
                        {lp0(rat(15, 4), "g24-1"), lchi(rat(15, 4), -3)}));
    r.push_back(id_spec("A1458", "thm12", P, "thm-main/A:1458", 25, 200,
                        {measure(Family::F3, 1458)},
                        {lp0(rat(135, 8), "g"), lchi(rat(15, 4), -4)}));
    r.push_back(id_spec("A648", "thm12", P, "thm-main/A:648", 25, 200,
                        {measure(Family::F4, 648)},
                        {lp0(rat(10), "h"), lchi(rat(5, 2), -4)}));
    r.push_back(id_spec("A2304", "thm12", P, "thm-main/A:2304", 25, 200,
                        {measure(Family::F4, 2304)},
                        {lp0(rat(20, 3), "g24-2"), lchi(rat(20, 3), -3)}));
    r.push_back(id_spec("A20736", "thm12", P, "thm-main/A:20736", 25, 200,
                        {measure(Family::F4, 20736)},
                        {lp0(rat(4), "g40"), lchi(rat(8, 5), -8)}));
    r.push_back(id_spec("A614656", "thm12", P, "thm-main/A:614656", 25, 200,
                        {measure(Family::F4, 614656)},
                        {lp0(rat(200, 3), "f"), lchi(rat(40, 3), -3)}));

    // ---- hypergeometric corollary -------------------------------------------
    r.push_back(id_spec("C13-1", "cor13", P, "cor-hyper/line1", 8, 8,
                        {pfq_one(Family::F2)},
                        {logr(rat(48), 2), lp0(rat(-64), "h")}));
    r.push_back(id_spec("C13-2", "cor13", P, "cor-hyper/line2", 25, 200,
                        {pfq_at(Family::F2, rat(1, 4))},
                        {logr(rat(256), 2), lp0(rat(-128, 3), "g48"), lchi(rat(-256, 3), -4)}));
    r.push_back(id_spec("C13-3", "cor13", P, "cor-hyper/line3", 25, 200,
                        {pfq_at(Family::F3, rat(1, 2))},
                        {logr(rat(54), 6), lp0(rat(-135, 2), "g24-1"), lchi(rat(-135, 2), -3)}));
    r.push_back(id_spec("C13-4", "cor13", P, "cor-hyper/line4", 25, 200,
                        {pfq_at(Family::F3, rat(2, 27))},
                        {logr(rat(243, 2), 2), logr(rat(729), 3), lp0(rat(-32805, 16), "g"),
                         lchi(rat(-3645, 8), -4)}));
    r.push_back(id_spec("C13-5", "cor13", P, "cor-hyper/line5", 25, 200,
                        {pfq_at(Family::F4, rat(32, 81))},
                        {logr(rat(81), 2), logr(rat(108), 3), lp0(rat(-270), "h"),
                         lchi(rat(-135, 2), -4)}));
    r.push_back(id_spec("C13-6", "cor13", P, "cor-hyper/line6", 25, 200,
                        {pfq_at(Family::F4, rat(1, 9))},
                        {logr(rat(768), 2), logr(rat(192), 3), lp0(rat(-640), "g24-2"),
                         lchi(rat(-640), -3)}));
    r.push_back(id_spec("C13-7", "cor13", P, "cor-hyper/line7", 25, 200,
                        {pfq_at(Family::F4, rat(1, 81))},
                        {logr(rat(6912), 2), logr(rat(3456), 3), lp0(rat(-3456), "g40"),
                         lchi(rat(-6912, 5), -8)}));
    r.push_back(id_spec("C13-8", "cor13", P, "cor-hyper/line8", 25, 200,
                        {pfq_at(Family::F4, rat(1, 2401))},
                        {logr(rat(614656, 3), 2), logr(rat(307328, 3), 7),
                         lp0(rat(-15366400, 9), "f"), lchi(rat(-3073280, 9), -3)}));

    // ---- the two headline unit-argument evaluations -------------------------
    r.push_back(id_spec("H11", "hyper-eqs", P, "eq/hyperI", 8, 8,
                        {pfq_one(Family::F4)},
                        {logr(rat(256, 3), 2), lp0(rat(-1280, 3), "f")}));
    r.push_back(id_spec("H12", "hyper-eqs", P, "eq/hyperII", 8, 8,
                        {pfq_one(Family::F3)},
                        {logr(rat(18), 2), logr(rat(27), 3), lp0(rat(-135), "g")}));

    // ---- hypergeometric transformations --------------------------------------
    r.push_back(id_spec("T1-hyperI", "transform", P, "transform/1", 8, 8,
                        {pfq_one(Family::F4)},
                        {pfq_at(Family::F4, rat(1, 2401), rat(3, 12005)), logr(rat(512, 15), 2),
                         logr(rat(-128, 5), 7), lchi(rat(256, 3), -3)}));
    r.push_back(id_spec("T2-hyperII", "transform", P, "transform/2", 8, 8,
                        {pfq_one(Family::F3)},
                        {pfq_at(Family::F3, rat(2, 27), rat(16, 243)), logr(rat(10), 2),
                         logr(rat(-21), 3), lchi(rat(30), -4)}));
    r.push_back(id_spec("T3-c13a", "transform", P, "transform/3", 8, 8,
                        {pfq_one(Family::F2)},
                        {pfq_at(Family::F4, rat(32, 81), rat(32, 135)), logr(rat(144, 5), 2),
                         logr(rat(-128, 5), 3), lchi(rat(16), -4)}));

    // ---- 13-term family ------------------------------------------------------
    r.push_back(id_spec("R1", "sec3", P, "qk-family/f3(108)", 25, 200,
                        {measure(Family::F3, 108)}, {lp0(rat(15), "g")}));
    r.push_back(id_spec("B31", "sec3", P, "qk-family/closure-3.1", 25, 200,
                        {qk(rat(2), -32)}, {lp0(rat(16), "g"), lchi(rat(4), -4)}));
    r.push_back(id_spec("B32", "sec3", P, "qk-family/3.2", 25, 200,
                        {qk(rat(1, 4), 16)}, {lp0(rat(2), "g")}));
    r.push_back(id_spec("B33", "sec3", P, "qk-family/3.3", 25, 200,
                        {qk(rat(1), 16)}, {lp0(rat(8), "g")}));
    r.push_back(id_spec("CP1-a", "sec3", P, "qk-family/cor-a", 25, 200,
                        {qk(rat(1), -32)}, {lp0(rat(8), "g"), lchi(rat(2), -4)}));
    r.push_back(id_spec("CP1-b", "sec3", P, "qk-family/cor-b", 25, 200,
                        {qk(rat(1, 2), -32), qk(rat(-1, 16), 16)},
                        {lp0(rat(7, 2), "g"), lchi(rat(1), -4)}));

    // ---- the two-variable sanity case ----------------------------------------
    {
        mahler::IntegralSpec smyth;
        smyth.kind = mahler::IntegralSpec::Kind::Smyth;
        r.push_back(id_spec("S1", "smyth", P, "smyth/m(x+y+1)", 3, 3,
                            {{rat(1), TermIntegral{smyth}}}, {lchi(rat(1), -3)}));
    }

    // ---- conjectural list (coefficient files required) -----------------------
    r.push_back(id_spec("S4-f2m64", "sec4", C, "conjecture/f2(-64)", 20, 20,
                        {measure(Family::F2, -64)},
                        {lp0(rat(2), "g32"), lchi(rat(2), -4)}));
    r.push_back(id_spec("S4-f2m512", "sec4", C, "conjecture/f2(-512)", 20, 200,
                        {measure(Family::F2, -512)},
                        {lp0(rat(1), "g64"), lchi(rat(1), -8)}));
    r.push_back(id_spec("S4-f4m1024", "sec4", C, "conjecture/f4(-1024)", 20, 200,
                        {measure(Family::F4, -1024)},
                        {lp0(rat(8), "g20"), lchi(rat(16, 5), -4)}));
    r.push_back(id_spec("S4-f4m12288", "sec4", C, "conjecture/f4(-12288)", 20, 200,
                        {measure(Family::F4, -12288)},
                        {lp0(rat(40, 9), "g36"), lchi(rat(80, 9), -3)}));
    r.push_back(id_spec("S4-f4m82944", "sec4", C, "conjecture/f4(-82944)", 20, 200,
                        {measure(Family::F4, -82944)},
                        {lp0(rat(40, 13), "g52"), lchi(rat(80, 13), -4)}));

    // ---- modular parameter golden values --------------------------------------
    struct SjRow {
        const char* id;
        int level;
        Rational im_sq;
        long target;
    };
    const SjRow rows[] = {
        {"L22-1", 2, rat(1, 4), 64},      {"L22-2", 2, rat(3, 4), 256},
        {"L22-3", 3, rat(1, 3), 108},     {"L22-4", 3, rat(2, 3), 216},
        {"L22-5", 3, rat(4, 3), 1458},    {"L22-6", 4, rat(1, 2), 256},
        {"L22-7", 4, rat(1), 648},        {"L22-8", 4, rat(3, 2), 2304},
        {"L22-9", 4, rat(5, 2), 20736},   {"L22-10", 4, rat(9, 2), 614656},
    };
    for (const auto& row : rows)
        r.push_back(id_spec(row.id, "lemma22", P,
                            std::string("weber-eval/s") + std::to_string(row.level), 30, 200,
                            {sj(row.level, row.im_sq)}, {exact(row.target)}));

    // ---- lattice factorization at t = 2 ---------------------------------------
    // 2(1 - 3/2^t + 2/2^2t) zeta L(chi_-4) at t = 2 has coefficient 3/4
    r.push_back(id_spec("L26-1", "lemma26", P, "lattice-factorization/1", 8, 9,
                        {lprod(rat(3, 4), {{1, 2}, {-4, 2}})},
                        {epstein(rat(1), 1, 0, 4), epstein(rat(-1), 2, 0, 2)}));
    r.push_back(id_spec("L26-2", "lemma26", P, "lattice-factorization/2", 8, 9,
                        {lprod(rat(2), {{8, 2}, {-3, 2}})},
                        {epstein(rat(1), 1, 0, 6), epstein(rat(-1), 2, 0, 3)}));
    r.push_back(id_spec("L26-3", "lemma26", P, "lattice-factorization/3", 8, 9,
                        {lprod(rat(2), {{5, 2}, {-8, 2}})},
                        {epstein(rat(1), 1, 0, 10), epstein(rat(-1), 2, 0, 5)}));
    r.push_back(id_spec("L26-4", "lemma26", P, "lattice-factorization/4", 8, 9,
                        {lprod(rat(2), {{12, 2}, {-4, 2}})},
                        {epstein(rat(1), 1, 0, 12), epstein(rat(-1), 3, 0, 4)}));
    r.push_back(id_spec("L26-5", "lemma26", P, "lattice-factorization/5", 8, 9,
                        {lprod(rat(2), {{24, 2}, {-3, 2}})},
                        {epstein(rat(1), 1, 0, 18), epstein(rat(-1), 2, 0, 9)}));

    // ---- direct Eisenstein-Kronecker cross-checks ------------------------------
    r.push_back(id_spec("P21-f2", "prop21", P, "eisenstein-kronecker/f2", 4, 5,
                        {ek(4, rat(1, 4))}, {gmeasure(Family::F2, rat(1, 4))}));
    r.push_back(id_spec("P21-f3", "prop21", P, "eisenstein-kronecker/f3", 4, 5,
                        {ek(3, rat(1, 3))}, {gmeasure(Family::F3, rat(1, 3))}));
    r.push_back(id_spec("P21-f4", "prop21", P, "eisenstein-kronecker/f4", 4, 5,
                        {ek(2, rat(1, 2))}, {gmeasure(Family::F4, rat(1, 2))}));

    return r;
}

} // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> table = build();
    return table;
}

} // namespace ml::verify
