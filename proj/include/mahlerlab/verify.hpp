// verify.hpp
//
// The identity registry and its certification engine.  Each identity pins a
// left side and a right side as linear combinations of evaluable terms; the
// two sides are computed at working precision and compared digit-by-digit.
// Left sides draw on qseries/mahler/hyper, right sides on lattice/lseries
// (the modules share nothing above the numeric foundation), so a match is
// genuine evidence, not a tautology.

#ifndef MAHLERLAB_VERIFY_HPP
#define MAHLERLAB_VERIFY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mahlerlab/hyper.hpp"
#include "mahlerlab/lattice.hpp"
#include "mahlerlab/lseries.hpp"
#include "mahlerlab/mahler.hpp"
#include "mahlerlab/precision.hpp"

namespace ml::verify {

// ---- evaluable terms -------------------------------------------------------

// f_family(k), best route (G-series preferred, cross-checked with hyper)
struct TermMeasure {
    mahler::Family family;
    Rational k;
};
// m(Q_(z-4)) via the f3 composition
struct TermQk {
    Rational z;
};
// s_level(q(tau)) at tau = i sqrt(im_sq)
struct TermSj {
    int level;
    Rational im_sq;
};
// pFq at a rational |x| < 1
struct TermPfq {
    hyper::HyperParams params;
    Rational x;
};
// pFq at x = +-1 (Levin-accelerated)
struct TermPfqUnit {
    hyper::HyperParams params;
    int sign;
};
// L'(form, 0) for a built-in or ingested coefficient sequence
struct TermLPrime0 {
    std::string form;
};
// L'(chi_D, -1)
struct TermLChiPrime {
    long d;
};
// log of a positive rational
struct TermLogRat {
    Rational arg;
};
// product of Dirichlet values prod_i L(chi_Di, si); D = 1 is zeta
struct TermLProduct {
    std::vector<std::pair<long, long>> factors;
};
// sum' Q(m,n)^-t over the lattice
struct TermEpstein {
    lattice::QuadForm q;
    double t;
};
// Eisenstein-Kronecker double sum at tau
struct TermEk {
    int j;
    Rational re;
    Rational im_sq;
};
// G-series Mahler route at the known CM point (for the direct-sum checks)
struct TermGMeasure {
    mahler::Family family;
    Rational im_sq;
};
// QMC torus integral
struct TermIntegral {
    mahler::IntegralSpec spec;
};
// exact integer
struct TermExact {
    Integer n;
};

using TermKind = std::variant<TermMeasure, TermQk, TermSj, TermPfq, TermPfqUnit, TermLPrime0,
                              TermLChiPrime, TermLogRat, TermLProduct, TermEpstein, TermEk,
                              TermGMeasure, TermIntegral, TermExact>;

struct LinTerm {
    Rational coef;
    TermKind kind;
};
using LinComb = std::vector<LinTerm>;

// ---- identities ------------------------------------------------------------

enum class ProofStatus { Proved, Conjectural };

struct IdentitySpec {
    std::string id;
    std::string group;  // thm12 cor13 hyper-eqs transform sec3 smyth sec4 lemma22 lemma26 prop21
    ProofStatus status = ProofStatus::Proved;
    std::string paper_anchor;
    int default_digits = 25;  // target when the caller does not ask for one
    int max_digits = 200;     // route-class cap, pinned per identity
    LinComb lhs, rhs;
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec* find_identity(const std::string& id);

// ---- reports ---------------------------------------------------------------

enum class ReportStatus { Verified, Failed, ConditionalSkipped };

struct VerificationReport {
    std::string id;
    ReportStatus status = ReportStatus::Failed;
    int digits_agreed = 0;
    int target_digits = 0;
    std::string lhs, rhs;  // decimal strings at working precision
    std::string lhs_method, rhs_method;
    long runtime_ms = 0;
    long working_bits = 0;
    std::string paper_anchor;
};

std::string report_json(const VerificationReport& r);
const char* status_name(ReportStatus s);

// ---- execution -------------------------------------------------------------

struct RunOptions {
    std::map<std::string, lseries::QExpansion> coefficients;  // ingested forms
    long samples = 2000000;     // QMC budget for integral terms
    unsigned long seed = 424242;
    bool self_check = false;    // recompute high-precision sides at doubled bits
    bool stable_output = false; // zero runtime_ms for byte-identical reports
    int jobs = 1;               // worker threads for run_all
};

// evaluate one side; the trace collects method tags and error estimates
struct SideValue {
    Real value;
    std::string method;
    Real error_estimate;
    bool high_precision = true;
};
SideValue eval_side(const LinComb& c, const PrecisionContext& ctx, const RunOptions& opt);

VerificationReport run_identity(const IdentitySpec& spec, int target_digits,
                                const RunOptions& opt);
VerificationReport run_identity(const std::string& id, int target_digits, const RunOptions& opt);

struct RunSummary {
    std::vector<VerificationReport> reports;
    int exit_code = 0;  // 0 all verified/skipped, 1 any failure
};
// filter: empty = all; otherwise match group name, "proved"/"conjectural",
// or an id prefix
RunSummary run_all(int target_digits, const std::string& filter, const RunOptions& opt);

// ---- coefficient files -----------------------------------------------------

// header `# label N 3 D epsilon`, then gap-free `k a_k` lines from k = 1.
// Validates a(1) = 1 and screens Hecke multiplicativity on coprime pairs
// up to 100 (violations are warnings, not errors).
lseries::QExpansion ingest_coeffs(const std::string& path, std::vector<std::string>* warnings);
void write_coeff_file(const lseries::QExpansion& form, const std::string& path);

} // namespace ml::verify

#endif
