#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgepair/pair.hpp"

namespace hodgepair {

/// Identifiers for every verifiable statement about a complex pair. Each is
/// checked as a predicate on exact dimension data (and, for the morphism
/// statements, on explicitly constructed matrices).
enum class StatementId {
    weak_hodge,     // three-way decomposition of each space, both complexes
    strong_hodge,   // cohomology realized by the harmonic subspace, both complexes
    new_hodge_weak, // space = minimal-harmonic (+) (Im d_M + Im delta_M)
    newHodge,       // Im P_q = Im d_{q-1,M} + Im delta_{q+1,M}
    firststep,      // h'_q = dim(ker d_M meet ker delta_m) + dim quotient
    firststep_b,    // h''_q = dim(ker d_m meet ker delta_M) + dim quotient
    morphism_wd,    // induced absolute quotient morphism is well defined
    morphism_b_wd,  // induced relative quotient morphism is well defined
    crucial,        // augmented absolute morphism is an isomorphism
    crucial_b,      // augmented relative morphism is an isomorphism
    TH,             // h'_q + minharm_{q-1} = H^q_M + H^{q-1}_M
    TH_b,           // h''_q + minharm_{q-1} = H^q_m + H^{q-1}_M
    finiteness,     // sandwich bounds for h'_q via the image map
    rough_estimate, // H^q_M <= h'_q
    simply,         // minharm_{q-1} = 0  =>  h'_q = H^q_M + H^{q-1}_M
    simply_r,       // vanishing small/big H^{q-1} => collapsed identities for h'
    finiteness_rel, // sandwich bounds for h''_q via the image map
    simply_rel,     // minharm_{q-1} = 0  =>  h''_q = H^q_m + H^{q-1}_M
    simply_s,       // vanishing small/big H^{q-1} => collapsed identities for h''
    difference,     // h'_q - h''_q = H^q_M - H^q_m
    remark_r1,      // equal differentials at q, q-1 => P = Laplacian, all dims agree
    cdgm_absolute,  // h'_q = refAbs_q + refAbs_{q-1} (user-provided reference)
    cdgm_relative,  // h''_q = refRel_q + refAbs_{q-1} (user-provided reference)
};

/// All statements, in the canonical order used by reports.
const std::vector<StatementId>& all_statements();

std::string to_string(StatementId s);
std::optional<StatementId> parse_statement(const std::string& name);

enum class Verdict { PASS, FAIL, NOT_APPLICABLE };

std::string to_string(Verdict v);

struct VerifyOptions {
    KernelMode mode = KernelMode::inclusive;
    /// When true, statements whose density hypothesis fails are reported
    /// NOT_APPLICABLE instead of being evaluated informatively.
    bool guard_density = false;
    /// Reference cohomology dimensions (degree 0..n) for the cdgm
    /// statements; absent means those statements are NOT_APPLICABLE.
    std::optional<std::vector<int>> reference_abs;
    std::optional<std::vector<int>> reference_rel;
};

struct VerificationResult {
    StatementId statement = StatementId::TH;
    int q = 0;
    /// All hypotheses of the statement hold on this instance (standing
    /// density hypothesis and any statement-specific trigger).
    bool hypotheses_met = false;
    /// Human-readable reasons for hypothesis failures and notable flags.
    std::vector<std::string> hypothesis_notes;
    /// The summands of the two sides being compared. Equality statements
    /// compare the sums; inequality statements are ordered comparisons of
    /// the recorded bounds (see each statement's comment above).
    std::vector<int> lhs_dims;
    std::vector<int> rhs_dims;
    Verdict verdict = Verdict::NOT_APPLICABLE;
};

/// Precomputes the full analysis of a pair once and answers per-statement,
/// per-degree queries against it.
class Verifier {
public:
    explicit Verifier(ComplexPair p, VerifyOptions options = {});

    const ComplexPair& pair() const { return pair_; }
    const PairAnalysis& analysis() const { return analysis_; }
    const VerifyOptions& options() const { return options_; }

    /// Verdict for one statement at degree q (0 <= q <= length).
    VerificationResult verify(StatementId s, int q) const;

    /// Every requested statement at every degree, statement-major.
    std::vector<VerificationResult> verify_all(
        const std::vector<StatementId>& statements) const;

private:
    ComplexPair pair_;
    VerifyOptions options_;
    PairAnalysis analysis_;
    std::vector<QuotientMorphisms> morphisms_;  // per degree 0..n

    int H_M(int q) const;
    int H_m(int q) const;
    int h_abs(int q) const;
    int h_rel(int q) const;
    int min_harmonic(int q) const;
    int image_map(int q) const;
};

/// One-shot convenience wrapper.
VerificationResult verify(StatementId s, const ComplexPair& p, int q,
                          const VerifyOptions& options = {});

struct NamedPair {
    std::string instance_id;
    ComplexPair pair;
};

struct InstanceReport {
    std::string instance_id;
    PairAnalysis analysis;
    std::vector<VerificationResult> verdicts;
};

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int not_applicable = 0;
};

struct Report {
    VerifyOptions options;
    std::vector<InstanceReport> instances;
    SuiteSummary summary;
};

/// Runs every statement on every instance. Instances may be processed by up
/// to `threads` workers; results are merged in input order, so the report is
/// deterministic regardless of parallelism. Verdicts never abort the suite.
Report run_suite(const std::vector<NamedPair>& instances,
                 const std::vector<StatementId>& statements,
                 const VerifyOptions& options = {}, int threads = 1);

}  // namespace hodgepair
