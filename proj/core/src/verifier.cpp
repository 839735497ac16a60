#include "hodgepair/verifier.hpp"

#include <atomic>
#include <numeric>
#include <thread>
#include <utility>

#include "hodgepair/error.hpp"

namespace hodgepair {

namespace {

struct StatementName {
    StatementId id;
    const char* name;
};

constexpr StatementName kStatementNames[] = {
    {StatementId::weak_hodge, "weak_hodge"},
    {StatementId::strong_hodge, "strong_hodge"},
    {StatementId::new_hodge_weak, "new_hodge_weak"},
    {StatementId::newHodge, "newHodge"},
    {StatementId::firststep, "firststep"},
    {StatementId::firststep_b, "firststep_b"},
    {StatementId::morphism_wd, "morphism_wd"},
    {StatementId::morphism_b_wd, "morphism_b_wd"},
    {StatementId::crucial, "crucial"},
    {StatementId::crucial_b, "crucial_b"},
    {StatementId::TH, "TH"},
    {StatementId::TH_b, "TH_b"},
    {StatementId::finiteness, "finiteness"},
    {StatementId::rough_estimate, "rough_estimate"},
    {StatementId::simply, "simply"},
    {StatementId::simply_r, "simply_r"},
    {StatementId::finiteness_rel, "finiteness_rel"},
    {StatementId::simply_rel, "simply_rel"},
    {StatementId::simply_s, "simply_s"},
    {StatementId::difference, "difference"},
    {StatementId::remark_r1, "remark_r1"},
    {StatementId::cdgm_absolute, "cdgm_absolute"},
    {StatementId::cdgm_relative, "cdgm_relative"},
};

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// True when every basis vector of a is orthogonal to every basis vector of
/// b under the space's inner product.
bool orthogonal_under(const Subspace& a, const Subspace& b,
                      const InnerProductSpace& space) {
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
            if (space.inner(a.basis().row(i), b.basis().row(j)) != Rational(0)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

const std::vector<StatementId>& all_statements() {
    static const std::vector<StatementId> all = [] {
        std::vector<StatementId> v;
        for (const auto& entry : kStatementNames) v.push_back(entry.id);
        return v;
    }();
    return all;
}

std::string to_string(StatementId s) {
    for (const auto& entry : kStatementNames) {
        if (entry.id == s) return entry.name;
    }
    throw Error("unknown statement id");
}

std::optional<StatementId> parse_statement(const std::string& name) {
    for (const auto& entry : kStatementNames) {
        if (name == entry.name) return entry.id;
    }
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PASS: return "PASS";
        case Verdict::FAIL: return "FAIL";
        case Verdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
    }
    throw Error("unknown verdict");
}

Verifier::Verifier(ComplexPair p, VerifyOptions options)
    : pair_(std::move(p)), options_(std::move(options)) {
    analysis_ = analyze(pair_, options_.mode);
    for (int q = 0; q <= pair_.length(); ++q) {
        morphisms_.push_back(quotient_morphisms(pair_, q, options_.mode));
    }
}

int Verifier::H_M(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].H_M;
}
int Verifier::H_m(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].H_m;
}
int Verifier::h_abs(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].hPrime;
}
int Verifier::h_rel(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].hDoublePrime;
}
int Verifier::min_harmonic(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].curlyHm;
}
int Verifier::image_map(int q) const {
    if (q < 0 || q > pair_.length()) return 0;
    return analysis_.dims[static_cast<std::size_t>(q)].imageMap;
}

VerificationResult Verifier::verify(StatementId s, int q) const {
    if (q < 0 || q > pair_.length()) {
        throw Error("verification degree out of range");
    }

    VerificationResult out;
    out.statement = s;
    out.q = q;

    const bool dense = analysis_.minimal_domains_dense;
    // remark_r1's conclusion is provable from its trigger alone, so density
    // is not part of its hypotheses.
    const bool density_applies = s != StatementId::remark_r1;
    bool guard_ok = true;   // statement-specific trigger; false => NOT_APPLICABLE
    bool pass = false;

    if (density_applies && !dense) {
        out.hypothesis_notes.push_back("minimal domains dense: false");
        if (analysis_.coarse) {
            out.hypothesis_notes.push_back(
                "coarse mesh: a degree has an empty minimal domain inside a "
                "nonzero space");
        }
    }

    const HarmonicData& h = analysis_.harmonics;
    const auto kerP_at = [&](int degree) {
        return degree >= 0 && degree <= pair_.length()
                   ? h.ker_p[static_cast<std::size_t>(degree)]
                   : Subspace::zero(pair_.space(degree).dim());
    };

    switch (s) {
        case StatementId::weak_hodge: {
            const HodgeTriple big = hodge_decompose(pair_.big(), q);
            const HodgeTriple small = hodge_decompose(pair_.small(), q);
            out.lhs_dims = {pair_.space(q).dim(), pair_.space(q).dim()};
            out.rhs_dims = {
                big.harmonic.dim() + big.image_d.dim() + big.image_delta.dim(),
                small.harmonic.dim() + small.image_d.dim() +
                    small.image_delta.dim()};
            pass = out.lhs_dims == out.rhs_dims && big.orthogonal && big.spans &&
                   small.orthogonal && small.spans;
            break;
        }
        case StatementId::strong_hodge: {
            const HodgeTriple big = hodge_decompose(pair_.big(), q);
            const HodgeTriple small = hodge_decompose(pair_.small(), q);
            out.lhs_dims = {H_M(q), H_m(q)};
            out.rhs_dims = {big.harmonic.dim(), small.harmonic.dim()};
            pass = out.lhs_dims == out.rhs_dims && big.orthogonal && big.spans &&
                   small.orthogonal && small.spans;
            break;
        }
        case StatementId::new_hodge_weak: {
            const Subspace& minharm = h.min_harmonic[static_cast<std::size_t>(q)];
            const Subspace images =
                subspace_sum(range_of(pair_.big().diff(q - 1)),
                             range_of(adjoint(pair_.small().diff(q))));
            out.lhs_dims = {pair_.space(q).dim()};
            out.rhs_dims = {minharm.dim(), images.dim()};
            pass = pair_.space(q).dim() == minharm.dim() + images.dim() &&
                   subspace_meet(minharm, images).dim() == 0 &&
                   orthogonal_under(minharm, images, pair_.space(q));
            break;
        }
        case StatementId::newHodge: {
            const Subspace range_p = range_of(build_P(pair_, q));
            const Subspace images =
                subspace_sum(range_of(pair_.big().diff(q - 1)),
                             range_of(adjoint(pair_.small().diff(q))));
            out.lhs_dims = {range_p.dim()};
            out.rhs_dims = {images.dim()};
            pass = range_p == images;
            break;
        }
        case StatementId::firststep: {
            const Subspace harmonic_mixed =
                subspace_meet(kernel_of(pair_.big().diff(q), options_.mode),
                              kernel_of(adjoint(pair_.big().diff(q - 1)),
                                        options_.mode));
            const Subspace numerator = subspace_meet(
                kerP_at(q), range_of(pair_.big().diff(q - 1)));
            const Subspace denominator =
                q - 1 >= 0 ? range_of(h.abs_diff[static_cast<std::size_t>(q - 1)])
                           : Subspace::zero(pair_.space(q).dim());
            out.lhs_dims = {h_abs(q)};
            out.rhs_dims = {harmonic_mixed.dim(),
                            numerator.dim() -
                                subspace_meet(numerator, denominator).dim()};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::firststep_b: {
            const Subspace harmonic_mixed =
                subspace_meet(kernel_of(pair_.small().diff(q), options_.mode),
                              kernel_of(adjoint(pair_.small().diff(q - 1)),
                                        options_.mode));
            const Subspace numerator = subspace_meet(
                kerP_at(q), range_of(pair_.small().diff(q - 1)));
            const Subspace denominator =
                q - 1 >= 0 ? range_of(h.rel_diff[static_cast<std::size_t>(q - 1)])
                           : Subspace::zero(pair_.space(q).dim());
            out.lhs_dims = {h_rel(q)};
            out.rhs_dims = {harmonic_mixed.dim(),
                            numerator.dim() -
                                subspace_meet(numerator, denominator).dim()};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::morphism_wd: {
            const QuotientMorphism& m =
                morphisms_[static_cast<std::size_t>(q)].induced_abs;
            out.lhs_dims = {m.domain_dim, m.codomain_dim};
            out.rhs_dims = out.lhs_dims;
            pass = m.well_defined;
            break;
        }
        case StatementId::morphism_b_wd: {
            const QuotientMorphism& m =
                morphisms_[static_cast<std::size_t>(q)].induced_rel;
            out.lhs_dims = {m.domain_dim, m.codomain_dim};
            out.rhs_dims = out.lhs_dims;
            pass = m.well_defined;
            break;
        }
        case StatementId::crucial: {
            const QuotientMorphism& m =
                morphisms_[static_cast<std::size_t>(q)].augmented_abs;
            out.lhs_dims = {morphisms_[static_cast<std::size_t>(q)]
                                .induced_abs.domain_dim,
                            min_harmonic(q - 1)};
            out.rhs_dims = {H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims) && m.well_defined &&
                   m.injective && m.surjective;
            break;
        }
        case StatementId::crucial_b: {
            const QuotientMorphism& m =
                morphisms_[static_cast<std::size_t>(q)].augmented_rel;
            out.lhs_dims = {morphisms_[static_cast<std::size_t>(q)]
                                .induced_rel.domain_dim,
                            min_harmonic(q - 1)};
            out.rhs_dims = {H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims) && m.well_defined &&
                   m.injective && m.surjective;
            break;
        }
        case StatementId::TH: {
            out.lhs_dims = {h_abs(q), min_harmonic(q - 1)};
            out.rhs_dims = {H_M(q), H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::TH_b: {
            out.lhs_dims = {h_rel(q), min_harmonic(q - 1)};
            out.rhs_dims = {H_m(q), H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::finiteness: {
            const int lower = H_M(q) + H_M(q - 1) - image_map(q - 1);
            const int upper = H_M(q) + H_M(q - 1);
            out.lhs_dims = {lower, h_abs(q)};
            out.rhs_dims = {h_abs(q), upper};
            const bool claim = min_harmonic(q - 1) <= image_map(q - 1);
            if (!claim) {
                out.hypothesis_notes.push_back(
                    "minimal harmonic dimension exceeds the image map at the "
                    "previous degree");
            }
            pass = lower <= h_abs(q) && h_abs(q) <= upper && claim;
            break;
        }
        case StatementId::rough_estimate: {
            out.lhs_dims = {H_M(q)};
            out.rhs_dims = {h_abs(q)};
            pass = H_M(q) <= h_abs(q);
            break;
        }
        case StatementId::simply: {
            guard_ok = min_harmonic(q - 1) == 0 || image_map(q - 1) == 0;
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "trigger not met: neither the minimal harmonic space nor "
                    "the image map vanishes at the previous degree");
            }
            out.lhs_dims = {h_abs(q)};
            out.rhs_dims = {H_M(q), H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::simply_r: {
            const bool small_vanishes = H_m(q - 1) == 0;
            const bool big_vanishes = H_M(q - 1) == 0;
            guard_ok = small_vanishes || big_vanishes;
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "trigger not met: neither cohomology vanishes at the "
                    "previous degree");
            }
            out.lhs_dims = {h_abs(q)};
            pass = true;
            if (small_vanishes) {
                out.rhs_dims = {H_M(q), H_M(q - 1)};
                pass = pass && h_abs(q) == H_M(q) + H_M(q - 1);
            }
            if (big_vanishes) {
                if (out.rhs_dims.empty()) out.rhs_dims = {H_M(q)};
                pass = pass && h_abs(q) == H_M(q);
            }
            break;
        }
        case StatementId::finiteness_rel: {
            const int lower = H_m(q) + H_M(q - 1) - image_map(q - 1);
            const int upper = H_m(q) + H_M(q - 1);
            out.lhs_dims = {lower, h_rel(q)};
            out.rhs_dims = {h_rel(q), upper};
            const bool claim = min_harmonic(q - 1) <= image_map(q - 1);
            if (!claim) {
                out.hypothesis_notes.push_back(
                    "minimal harmonic dimension exceeds the image map at the "
                    "previous degree");
            }
            pass = lower <= h_rel(q) && h_rel(q) <= upper && claim;
            break;
        }
        case StatementId::simply_rel: {
            guard_ok = min_harmonic(q - 1) == 0 || image_map(q - 1) == 0;
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "trigger not met: neither the minimal harmonic space nor "
                    "the image map vanishes at the previous degree");
            }
            out.lhs_dims = {h_rel(q)};
            out.rhs_dims = {H_m(q), H_M(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::simply_s: {
            const bool small_vanishes = H_m(q - 1) == 0;
            const bool big_vanishes = H_M(q - 1) == 0;
            guard_ok = small_vanishes || big_vanishes;
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "trigger not met: neither cohomology vanishes at the "
                    "previous degree");
            }
            out.lhs_dims = {h_rel(q)};
            pass = true;
            if (small_vanishes) {
                out.rhs_dims = {H_m(q), H_M(q - 1)};
                pass = pass && h_rel(q) == H_m(q) + H_M(q - 1);
            }
            if (big_vanishes) {
                if (out.rhs_dims.empty()) out.rhs_dims = {H_m(q)};
                pass = pass && h_rel(q) == H_m(q);
            }
            break;
        }
        case StatementId::difference: {
            out.lhs_dims = {h_abs(q), h_rel(q)};
            out.rhs_dims = {H_M(q), H_m(q)};
            pass = h_abs(q) - h_rel(q) == H_M(q) - H_m(q);
            break;
        }
        case StatementId::remark_r1: {
            const bool same_here =
                pair_.big().diff(q).graph() == pair_.small().diff(q).graph();
            const bool same_below = pair_.big().diff(q - 1).graph() ==
                                    pair_.small().diff(q - 1).graph();
            guard_ok = same_here && same_below;
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "trigger not met: the two differentials differ at this or "
                    "the previous degree");
            }
            out.lhs_dims = {h_abs(q), h_rel(q)};
            out.rhs_dims = {H_M(q), H_m(q)};
            const LinearRelation p_q = build_P(pair_, q);
            const bool collapses = p_q == laplacian(pair_.big(), q) &&
                                   p_q == laplacian(pair_.small(), q);
            pass = collapses && h_abs(q) == h_rel(q) && h_abs(q) == H_M(q) &&
                   H_M(q) == H_m(q);
            break;
        }
        case StatementId::cdgm_absolute: {
            guard_ok = options_.reference_abs.has_value();
            out.lhs_dims = {h_abs(q)};
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "no absolute reference dimensions provided");
                break;
            }
            const auto& ref = *options_.reference_abs;
            const auto ref_at = [&](int degree) {
                return degree >= 0 && degree < static_cast<int>(ref.size())
                           ? ref[static_cast<std::size_t>(degree)]
                           : 0;
            };
            out.rhs_dims = {ref_at(q), ref_at(q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
        case StatementId::cdgm_relative: {
            guard_ok = options_.reference_abs.has_value() &&
                       options_.reference_rel.has_value();
            out.lhs_dims = {h_rel(q)};
            if (!guard_ok) {
                out.hypothesis_notes.push_back(
                    "absolute and relative reference dimensions required");
                break;
            }
            const auto& abs_ref = *options_.reference_abs;
            const auto& rel_ref = *options_.reference_rel;
            const auto at = [](const std::vector<int>& v, int degree) {
                return degree >= 0 && degree < static_cast<int>(v.size())
                           ? v[static_cast<std::size_t>(degree)]
                           : 0;
            };
            out.rhs_dims = {at(rel_ref, q), at(abs_ref, q - 1)};
            pass = sum(out.lhs_dims) == sum(out.rhs_dims);
            break;
        }
    }

    out.hypotheses_met = guard_ok && (!density_applies || dense);
    if (!guard_ok || (options_.guard_density && density_applies && !dense)) {
        out.verdict = Verdict::NOT_APPLICABLE;
    } else {
        out.verdict = pass ? Verdict::PASS : Verdict::FAIL;
    }
    return out;
}

std::vector<VerificationResult> Verifier::verify_all(
    const std::vector<StatementId>& statements) const {
    std::vector<VerificationResult> out;
    for (StatementId s : statements) {
        for (int q = 0; q <= pair_.length(); ++q) {
            out.push_back(verify(s, q));
        }
    }
    return out;
}

VerificationResult verify(StatementId s, const ComplexPair& p, int q,
                          const VerifyOptions& options) {
    return Verifier(p, options).verify(s, q);
}

Report run_suite(const std::vector<NamedPair>& instances,
                 const std::vector<StatementId>& statements,
                 const VerifyOptions& options, int threads) {
    Report report;
    report.options = options;
    report.instances.resize(instances.size());

    const auto process = [&](std::size_t i) {
        Verifier verifier(instances[i].pair, options);
        report.instances[i].instance_id = instances[i].instance_id;
        report.instances[i].analysis = verifier.analysis();
        report.instances[i].verdicts = verifier.verify_all(statements);
    };

    const int worker_count = std::min<int>(
        std::max(threads, 1), static_cast<int>(instances.size()));
    if (worker_count <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < instances.size();
                     i = next.fetch_add(1)) {
                    process(i);
                }
            });
        }
        for (auto& worker : workers) worker.join();
    }

    for (const InstanceReport& instance : report.instances) {
        for (const VerificationResult& r : instance.verdicts) {
            switch (r.verdict) {
                case Verdict::PASS: ++report.summary.pass; break;
                case Verdict::FAIL: ++report.summary.fail; break;
                case Verdict::NOT_APPLICABLE: ++report.summary.not_applicable; break;
            }
        }
    }
    return report;
}

}  // namespace hodgepair
