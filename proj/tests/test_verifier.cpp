#include "hodgepair/verifier.hpp"

#include <algorithm>
#include <doctest.h>

#include "hodgepair/error.hpp"

using namespace hodgepair;

namespace {

const InnerProductSpace E1 = InnerProductSpace::euclidean(1);
const InnerProductSpace E2 = InnerProductSpace::euclidean(2);
const InnerProductSpace E3 = InnerProductSpace::euclidean(3);

const RatMatrix d_interval = RatMatrix::from_int({{-1, 1, 0}, {0, -1, 1}});
const RatMatrix d_circle =
    RatMatrix::from_int({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
const RatMatrix d_edge = RatMatrix::from_int({{-1, 1}});

// Two-edge path with both endpoints treated as boundary: the small complex
// only differentiates the middle vertex, so its domain is not dense.
ComplexPair two_edge_pair() {
    HilbertComplex big({E3, E2},
                       {LinearRelation::from_matrix(d_interval, E3, E2)});
    Subspace interior = Subspace::from_rows(RatMatrix::from_int({{0, 1, 0}}), 3);
    HilbertComplex small(
        {E3, E2}, {LinearRelation::from_matrix(d_interval, interior, E3, E2)});
    return ComplexPair(std::move(big), std::move(small));
}

// One edge, both vertices on the boundary: the small complex has nothing
// left to differentiate at all.
ComplexPair one_edge_pair() {
    HilbertComplex big({E2, E1}, {LinearRelation::from_matrix(d_edge, E2, E1)});
    HilbertComplex small(
        {E2, E1},
        {LinearRelation::from_matrix(d_edge, Subspace::zero(2), E2, E1)});
    return ComplexPair(std::move(big), std::move(small));
}

HilbertComplex interval() {
    return HilbertComplex({E3, E2},
                          {LinearRelation::from_matrix(d_interval, E3, E2)});
}

HilbertComplex circle() {
    return HilbertComplex({E3, E3},
                          {LinearRelation::from_matrix(d_circle, E3, E3)});
}

ComplexPair trivial_pair(const HilbertComplex& c) { return ComplexPair(c, c); }

const VerificationResult& find(const std::vector<VerificationResult>& rs,
                               StatementId s, int q) {
    for (const auto& r : rs) {
        if (r.statement == s && r.q == q) return r;
    }
    throw Error("missing result");
}

bool has_note_containing(const VerificationResult& r, const std::string& text) {
    return std::any_of(r.hypothesis_notes.begin(), r.hypothesis_notes.end(),
                       [&](const std::string& note) {
                           return note.find(text) != std::string::npos;
                       });
}

}  // namespace

TEST_CASE("statement names round-trip through parsing") {
    CHECK(all_statements().size() == 23);
    for (StatementId s : all_statements()) {
        const std::string name = to_string(s);
        const auto parsed = parse_statement(name);
        REQUIRE(parsed.has_value());
        CHECK(*parsed == s);
    }
    CHECK_FALSE(parse_statement("no_such_statement").has_value());
    CHECK(to_string(Verdict::PASS) == "PASS");
    CHECK(to_string(Verdict::FAIL) == "FAIL");
    CHECK(to_string(Verdict::NOT_APPLICABLE) == "NOT_APPLICABLE");
}

TEST_CASE("index theorem on the two-edge interval") {
    const Verifier v(two_edge_pair());

    // The conclusion holds even though density fails; the verdict is an
    // honest PASS with the unmet hypothesis recorded.
    const auto th1 = v.verify(StatementId::TH, 1);
    CHECK(th1.verdict == Verdict::PASS);
    CHECK_FALSE(th1.hypotheses_met);
    CHECK(has_note_containing(th1, "minimal domains dense: false"));
    CHECK(th1.lhs_dims == std::vector<int>{1, 0});
    CHECK(th1.rhs_dims == std::vector<int>{0, 1});

    const auto th0 = v.verify(StatementId::TH, 0);
    CHECK(th0.verdict == Verdict::PASS);
    CHECK(th0.lhs_dims == std::vector<int>{1, 0});
    CHECK(th0.rhs_dims == std::vector<int>{1, 0});

    const auto thb1 = v.verify(StatementId::TH_b, 1);
    CHECK(thb1.verdict == Verdict::PASS);
    CHECK(thb1.lhs_dims == std::vector<int>{2, 0});
    CHECK(thb1.rhs_dims == std::vector<int>{1, 1});

    const auto thb0 = v.verify(StatementId::TH_b, 0);
    CHECK(thb0.verdict == Verdict::PASS);
    CHECK(thb0.lhs_dims == std::vector<int>{0, 0});
    CHECK(thb0.rhs_dims == std::vector<int>{0, 0});
}

TEST_CASE("index theorem fails honestly on the one-edge interval") {
    const Verifier v(one_edge_pair());

    // The minimal domain is zero inside a nonzero space, so density fails
    // and the conclusion genuinely does not hold; the verdict records both.
    const auto thb = v.verify(StatementId::TH_b, 1);
    CHECK(thb.verdict == Verdict::FAIL);
    CHECK_FALSE(thb.hypotheses_met);
    CHECK(thb.lhs_dims == std::vector<int>{1, 0});
    CHECK(thb.rhs_dims == std::vector<int>{1, 1});
    CHECK(has_note_containing(thb, "minimal domains dense: false"));

    const auto th = v.verify(StatementId::TH, 1);
    CHECK(th.verdict == Verdict::FAIL);
    CHECK_FALSE(th.hypotheses_met);
    CHECK(th.lhs_dims == std::vector<int>{0, 0});
    CHECK(th.rhs_dims == std::vector<int>{0, 1});
    CHECK(has_note_containing(th, "coarse mesh"));

    const auto fin = v.verify(StatementId::finiteness, 1);
    CHECK(fin.verdict == Verdict::FAIL);
    CHECK(fin.lhs_dims == std::vector<int>{1, 0});
    CHECK(fin.rhs_dims == std::vector<int>{0, 1});

    // The rough estimate and the difference identity survive even here.
    CHECK(v.verify(StatementId::rough_estimate, 1).verdict == Verdict::PASS);
    CHECK(v.verify(StatementId::difference, 0).verdict == Verdict::PASS);
    CHECK(v.verify(StatementId::difference, 1).verdict == Verdict::PASS);
    CHECK(v.verify(StatementId::new_hodge_weak, 0).verdict == Verdict::PASS);
    CHECK(v.verify(StatementId::new_hodge_weak, 1).verdict == Verdict::PASS);
}

TEST_CASE("density guard converts unmet hypotheses into non-applicability") {
    VerifyOptions opts;
    opts.guard_density = true;

    const Verifier one(one_edge_pair(), opts);
    const auto failed = one.verify(StatementId::TH, 1);
    CHECK(failed.verdict == Verdict::NOT_APPLICABLE);
    CHECK_FALSE(failed.hypotheses_met);
    CHECK(has_note_containing(failed, "minimal domains dense: false"));

    // Guarding also silences statements that happened to pass without
    // density...
    const Verifier two(two_edge_pair(), opts);
    CHECK(two.verify(StatementId::TH, 1).verdict == Verdict::NOT_APPLICABLE);

    // ...but changes nothing on a genuinely dense pair.
    const Verifier dense(trivial_pair(interval()), opts);
    CHECK(dense.verify(StatementId::TH, 1).verdict == Verdict::PASS);
    CHECK(dense.verify(StatementId::TH, 1).hypotheses_met);

    // The collapse remark does not depend on density, so guarding leaves it
    // alone even on a non-dense pair whose differentials agree... which the
    // two-edge pair's do not; use its trigger behaviour instead.
    CHECK(two.verify(StatementId::remark_r1, 1).verdict ==
          Verdict::NOT_APPLICABLE);  // trigger, not density
    CHECK(has_note_containing(two.verify(StatementId::remark_r1, 1),
                              "trigger not met"));
}

TEST_CASE("two-edge interval: decompositions, steps, and estimates") {
    const Verifier v(two_edge_pair());

    for (int q = 0; q <= 1; ++q) {
        CHECK(v.verify(StatementId::weak_hodge, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::strong_hodge, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::new_hodge_weak, q).verdict ==
              Verdict::PASS);
        CHECK(v.verify(StatementId::newHodge, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::firststep, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::firststep_b, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::morphism_wd, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::morphism_b_wd, q).verdict ==
              Verdict::PASS);
        CHECK(v.verify(StatementId::crucial, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::crucial_b, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::finiteness, q).verdict == Verdict::PASS);
        CHECK(v.verify(StatementId::finiteness_rel, q).verdict ==
              Verdict::PASS);
        CHECK(v.verify(StatementId::rough_estimate, q).verdict ==
              Verdict::PASS);
        CHECK(v.verify(StatementId::difference, q).verdict == Verdict::PASS);
    }

    const auto fs1 = v.verify(StatementId::firststep, 1);
    CHECK(fs1.lhs_dims == std::vector<int>{1});
    CHECK(fs1.rhs_dims == std::vector<int>{0, 1});
    const auto fs0 = v.verify(StatementId::firststep, 0);
    CHECK(fs0.rhs_dims == std::vector<int>{1, 0});
    const auto fsb1 = v.verify(StatementId::firststep_b, 1);
    CHECK(fsb1.lhs_dims == std::vector<int>{2});
    CHECK(fsb1.rhs_dims == std::vector<int>{1, 1});

    const auto nh0 = v.verify(StatementId::new_hodge_weak, 0);
    CHECK(nh0.lhs_dims == std::vector<int>{3});
    CHECK(nh0.rhs_dims == std::vector<int>{0, 3});
    const auto nh1 = v.verify(StatementId::new_hodge_weak, 1);
    CHECK(nh1.lhs_dims == std::vector<int>{2});
    CHECK(nh1.rhs_dims == std::vector<int>{0, 2});

    // The simple form's trigger holds at q=1 (the minimal harmonic space at
    // q=0 vanishes), but density still does not, so the hypotheses as a
    // whole stay unmet while the verdict is an informative PASS.
    const auto s1 = v.verify(StatementId::simply, 1);
    CHECK_FALSE(s1.hypotheses_met);
    CHECK(s1.verdict == Verdict::PASS);
    CHECK(s1.lhs_dims == std::vector<int>{1});
    CHECK(s1.rhs_dims == std::vector<int>{0, 1});
    const auto sr1 = v.verify(StatementId::simply_rel, 1);
    CHECK(sr1.verdict == Verdict::PASS);
    CHECK(sr1.lhs_dims == std::vector<int>{2});
    CHECK(sr1.rhs_dims == std::vector<int>{1, 1});

    // H_m vanishes at q=0, so the first numbered case of the refined simple
    // forms applies.
    const auto srr = v.verify(StatementId::simply_r, 1);
    CHECK(srr.verdict == Verdict::PASS);
    const auto srs = v.verify(StatementId::simply_s, 1);
    CHECK(srs.verdict == Verdict::PASS);

    // The two differentials differ, so the collapse remark does not apply.
    const auto r1 = v.verify(StatementId::remark_r1, 1);
    CHECK(r1.verdict == Verdict::NOT_APPLICABLE);
    CHECK_FALSE(r1.hypotheses_met);
    CHECK(has_note_containing(r1, "trigger not met"));
}

TEST_CASE("crucial morphisms recover the previous cohomology") {
    const Verifier v(two_edge_pair());

    const auto c1 = v.verify(StatementId::crucial, 1);
    CHECK(c1.lhs_dims == std::vector<int>{1, 0});
    CHECK(c1.rhs_dims == std::vector<int>{1});
    const auto cb1 = v.verify(StatementId::crucial_b, 1);
    CHECK(cb1.lhs_dims == std::vector<int>{1, 0});
    CHECK(cb1.rhs_dims == std::vector<int>{1});
}

TEST_CASE("reference dimension comparisons") {
    VerifyOptions opts;
    opts.reference_abs = std::vector<int>{1, 0};
    opts.reference_rel = std::vector<int>{0, 1};
    const Verifier v(two_edge_pair(), opts);

    const auto abs0 = v.verify(StatementId::cdgm_absolute, 0);
    CHECK(abs0.verdict == Verdict::PASS);
    CHECK(abs0.lhs_dims == std::vector<int>{1});
    CHECK(abs0.rhs_dims == std::vector<int>{1, 0});
    const auto abs1 = v.verify(StatementId::cdgm_absolute, 1);
    CHECK(abs1.verdict == Verdict::PASS);
    CHECK(abs1.lhs_dims == std::vector<int>{1});
    CHECK(abs1.rhs_dims == std::vector<int>{0, 1});

    const auto rel0 = v.verify(StatementId::cdgm_relative, 0);
    CHECK(rel0.verdict == Verdict::PASS);
    CHECK(rel0.lhs_dims == std::vector<int>{0});
    CHECK(rel0.rhs_dims == std::vector<int>{0, 0});
    const auto rel1 = v.verify(StatementId::cdgm_relative, 1);
    CHECK(rel1.verdict == Verdict::PASS);
    CHECK(rel1.lhs_dims == std::vector<int>{2});
    CHECK(rel1.rhs_dims == std::vector<int>{1, 1});

    // Without reference dimensions the comparisons are not applicable.
    const Verifier bare(two_edge_pair());
    const auto na = bare.verify(StatementId::cdgm_absolute, 1);
    CHECK(na.verdict == Verdict::NOT_APPLICABLE);
    CHECK_FALSE(na.hypotheses_met);
    CHECK(has_note_containing(na, "reference"));
    CHECK(bare.verify(StatementId::cdgm_relative, 1).verdict ==
          Verdict::NOT_APPLICABLE);
}

TEST_CASE("trivial pairs: every applicable statement passes") {
    for (const HilbertComplex& c : {interval(), circle()}) {
        const Verifier v(trivial_pair(c));
        CHECK(v.analysis().minimal_domains_dense);
        const auto results = v.verify_all(all_statements());
        for (const auto& r : results) {
            CHECK_MESSAGE(r.verdict != Verdict::FAIL,
                          to_string(r.statement) << " q=" << r.q);
        }
        // The collapse remark applies everywhere and passes.
        for (int q = 0; q <= 1; ++q) {
            const auto& r = find(results, StatementId::remark_r1, q);
            CHECK(r.verdict == Verdict::PASS);
            CHECK(r.hypotheses_met);
        }
        CHECK(find(results, StatementId::TH, 1).verdict == Verdict::PASS);
        CHECK(find(results, StatementId::TH, 1).hypotheses_met);
        CHECK(find(results, StatementId::TH_b, 1).verdict == Verdict::PASS);
        CHECK(find(results, StatementId::difference, 1).verdict ==
              Verdict::PASS);
    }
}

TEST_CASE("verification outside the complex's degrees is an error") {
    const Verifier v(two_edge_pair());
    CHECK_THROWS_AS(v.verify(StatementId::TH, -1), Error);
    CHECK_THROWS_AS(v.verify(StatementId::TH, 2), Error);
    CHECK_NOTHROW(v.verify(StatementId::TH, 0));
    CHECK_NOTHROW(v.verify(StatementId::TH, 1));
}

TEST_CASE("verify_all enumerates statement-major, degree-ascending") {
    const Verifier v(two_edge_pair());
    const std::vector<StatementId> wanted = {StatementId::TH,
                                             StatementId::difference};
    const auto results = v.verify_all(wanted);
    REQUIRE(results.size() == 4);
    CHECK(results[0].statement == StatementId::TH);
    CHECK(results[0].q == 0);
    CHECK(results[1].statement == StatementId::TH);
    CHECK(results[1].q == 1);
    CHECK(results[2].statement == StatementId::difference);
    CHECK(results[2].q == 0);
    CHECK(results[3].statement == StatementId::difference);
    CHECK(results[3].q == 1);
}

TEST_CASE("suite runs are deterministic and thread-count independent") {
    const std::vector<NamedPair> instances = {
        {"two_edge", two_edge_pair()},
        {"one_edge", one_edge_pair()},
        {"trivial_interval", trivial_pair(interval())},
        {"trivial_circle", trivial_pair(circle())},
    };

    const Report serial = run_suite(instances, all_statements(), {}, 1);
    const Report parallel = run_suite(instances, all_statements(), {}, 4);

    REQUIRE(serial.instances.size() == 4);
    REQUIRE(parallel.instances.size() == 4);
    for (std::size_t i = 0; i < serial.instances.size(); ++i) {
        CHECK(serial.instances[i].instance_id == instances[i].instance_id);
        CHECK(parallel.instances[i].instance_id == instances[i].instance_id);
        const auto& a = serial.instances[i].verdicts;
        const auto& b = parallel.instances[i].verdicts;
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a[j].statement == b[j].statement);
            CHECK(a[j].q == b[j].q);
            CHECK(a[j].verdict == b[j].verdict);
            CHECK(a[j].lhs_dims == b[j].lhs_dims);
            CHECK(a[j].rhs_dims == b[j].rhs_dims);
        }
    }

    CHECK(serial.summary.pass == parallel.summary.pass);
    CHECK(serial.summary.fail == parallel.summary.fail);
    CHECK(serial.summary.not_applicable == parallel.summary.not_applicable);
    CHECK(serial.summary.pass + serial.summary.fail +
              serial.summary.not_applicable ==
          static_cast<int>(4 * all_statements().size() * 2));

    // The one-edge instance contributes the only failures.
    int one_edge_fails = 0;
    for (const auto& r : serial.instances[1].verdicts) {
        if (r.verdict == Verdict::FAIL) ++one_edge_fails;
    }
    CHECK(serial.summary.fail == one_edge_fails);
    CHECK(serial.summary.fail > 0);

    const Report empty = run_suite({}, all_statements(), {}, 4);
    CHECK(empty.instances.empty());
    CHECK(empty.summary.pass == 0);
    CHECK(empty.summary.fail == 0);
    CHECK(empty.summary.not_applicable == 0);
}

TEST_CASE("strict kernels change the mixed quantities, not the classical ones") {
    VerifyOptions opts;
    opts.mode = KernelMode::strict;
    const Verifier v(two_edge_pair(), opts);
    // Strict kernels kill the multivalued mixed Laplacian's kernel entirely,
    // so the harmonic counts drop to zero while cohomology is untouched.
    const auto th = v.verify(StatementId::TH, 1);
    CHECK(th.lhs_dims == std::vector<int>{0, 0});
    CHECK(th.rhs_dims == std::vector<int>{0, 1});
    CHECK(th.verdict == Verdict::FAIL);
    CHECK(v.verify(StatementId::strong_hodge, 1).verdict == Verdict::PASS);
}
