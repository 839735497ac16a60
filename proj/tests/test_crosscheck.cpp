#include "hodgepair/crosscheck.hpp"

#include <doctest.h>

#include "hodgepair/error.hpp"
#include "hodgepair/random.hpp"
#include "hodgepair/simplicial.hpp"

using namespace hodgepair;

namespace {

const InnerProductSpace E1 = InnerProductSpace::euclidean(1);
const InnerProductSpace E2 = InnerProductSpace::euclidean(2);
const InnerProductSpace E3 = InnerProductSpace::euclidean(3);

const RatMatrix d_interval = RatMatrix::from_int({{-1, 1, 0}, {0, -1, 1}});
const RatMatrix d_edge = RatMatrix::from_int({{-1, 1}});

ComplexPair two_edge_pair() {
    HilbertComplex big({E3, E2},
                       {LinearRelation::from_matrix(d_interval, E3, E2)});
    Subspace interior = Subspace::from_rows(RatMatrix::from_int({{0, 1, 0}}), 3);
    HilbertComplex small(
        {E3, E2}, {LinearRelation::from_matrix(d_interval, interior, E3, E2)});
    return ComplexPair(std::move(big), std::move(small));
}

ComplexPair one_edge_pair() {
    HilbertComplex big({E2, E1}, {LinearRelation::from_matrix(d_edge, E2, E1)});
    HilbertComplex small(
        {E2, E1},
        {LinearRelation::from_matrix(d_edge, Subspace::zero(2), E2, E1)});
    return ComplexPair(std::move(big), std::move(small));
}

ComplexPair mesh_pair(const std::vector<std::vector<int>>& tuples) {
    const SimplicialComplex k = make_complex(tuples);
    return cochain_pair(k, boundary_subcomplex(k));
}

}  // namespace

TEST_CASE("well-conditioned instances agree at a tight tolerance") {
    const AgreementRecord two = crosscheck_backend(two_edge_pair(), 1e-9);
    CHECK(two.agreed());
    CHECK(two.degrees_checked == 2);
    CHECK(two.tolerance == 1e-9);

    const AgreementRecord one = crosscheck_backend(one_edge_pair(), 1e-9);
    CHECK(one.agreed());

    // Strict kernels change several exact dimensions; the float mirror must
    // follow them.
    const AgreementRecord strict =
        crosscheck_backend(two_edge_pair(), 1e-9, KernelMode::strict);
    CHECK(strict.agreed());
}

TEST_CASE("mesh fixtures agree at a tight tolerance") {
    const ComplexPair disk =
        mesh_pair({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
    CHECK(crosscheck_backend(disk, 1e-9).agreed());

    const ComplexPair annulus = mesh_pair(
        {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
    CHECK(crosscheck_backend(annulus, 1e-9).agreed());

    // Fractional weights put genuine non-integers into the Grams.
    const SimplicialComplex weighted = make_complex(
        {{0, 1}, {1, 2}}, {{0, {Rational(1, 3), Rational(2), Rational(5, 7)}},
                           {1, {Rational(3, 2), Rational(1, 6)}}});
    const ComplexPair weighted_pair =
        cochain_pair(weighted, boundary_subcomplex(weighted));
    CHECK(crosscheck_backend(weighted_pair, 1e-9).agreed());
}

TEST_CASE("random pairs agree at a tight tolerance") {
    RandomPairProfile profile;
    profile.dims = {3, 5, 4, 2};
    profile.cohomology = {1, 1, 1, 1};
    profile.density = Rational(1, 2);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CAPTURE(seed);
        const ComplexPair pair = generate_random_pair(profile, seed * 211);
        CHECK(crosscheck_backend(pair, 1e-9).agreed());
    }
}

TEST_CASE("an absurd tolerance produces reported disagreements") {
    const AgreementRecord record = crosscheck_backend(two_edge_pair(), 10.0);
    CHECK_FALSE(record.agreed());
    CHECK(record.disagreements.size() > 0);
    for (const DimensionDisagreement& d : record.disagreements) {
        CHECK(d.q >= 0);
        CHECK(d.q <= 1);
        CHECK_FALSE(d.field.empty());
        CHECK(d.exact_value != d.float_value);
    }
    // With every pivot suppressed, the float kernel of the degree-0
    // differential is the whole 3-space while the exact one is a line, so
    // H_M at degree 0 must be among the reports.
    bool found_h_m = false;
    for (const DimensionDisagreement& d : record.disagreements) {
        if (d.q == 0 && d.field == "H_M") {
            CHECK(d.exact_value == 1);
            found_h_m = true;
        }
    }
    CHECK(found_h_m);
}

TEST_CASE("nonpositive tolerances are rejected") {
    CHECK_THROWS_AS(crosscheck_backend(two_edge_pair(), 0.0), Error);
    CHECK_THROWS_AS(crosscheck_backend(two_edge_pair(), -1e-9), Error);
}
