#include <doctest.h>

#include "hodgepair/complex.hpp"
#include "hodgepair/error.hpp"

using namespace hodgepair;

namespace {

const InnerProductSpace E1 = InnerProductSpace::euclidean(1);
const InnerProductSpace E2 = InnerProductSpace::euclidean(2);
const InnerProductSpace E3 = InnerProductSpace::euclidean(3);

// Path 0-1-2: coboundary rows indexed by edges (01), (12).
const RatMatrix d_interval = RatMatrix::from_int({{-1, 1, 0}, {0, -1, 1}});
// Hollow triangle: edges (01), (02), (12) on vertices 0,1,2.
const RatMatrix d_circle = RatMatrix::from_int({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
// Solid triangle: edge-to-face coboundary for face (012).
const RatMatrix d_face = RatMatrix::from_int({{1, -1, 1}});

HilbertComplex interval_absolute() {
    return HilbertComplex({E3, E2},
                          {LinearRelation::from_matrix(d_interval, E3, E2)});
}

HilbertComplex interval_minimal() {
    Subspace interior = Subspace::from_rows(RatMatrix::from_int({{0, 1, 0}}), 3);
    return HilbertComplex(
        {E3, E2}, {LinearRelation::from_matrix(d_interval, interior, E3, E2)});
}

HilbertComplex circle() {
    return HilbertComplex({E3, E3}, {LinearRelation::from_matrix(d_circle, E3, E3)});
}

HilbertComplex triangle_minimal() {
    // Every vertex and edge lies on the boundary: both lower differentials
    // are restricted to the zero domain.
    return HilbertComplex(
        {E3, E3, E1},
        {LinearRelation::from_matrix(d_circle, Subspace::zero(3), E3, E3),
         LinearRelation::from_matrix(d_face, Subspace::zero(3), E3, E1)});
}

}  // namespace

TEST_CASE("interval cochain complex is valid") {
    HilbertComplex c = interval_absolute();
    CHECK(c.is_valid());
    CHECK(c.length() == 1);
    CHECK(validate(c).degrees.empty());  // single differential: nothing to compose
}

TEST_CASE("complex construction rejects shape mismatches") {
    CHECK_THROWS_AS(
        HilbertComplex({E3, E2}, {LinearRelation::from_matrix(d_circle, E3, E3)}),
        Error);
    CHECK_THROWS_AS(HilbertComplex({E3, E2}, {}), Error);
    CHECK_THROWS_AS(HilbertComplex({}, {}), Error);
}

TEST_CASE("non-vanishing composition is reported, not thrown") {
    RatMatrix a = RatMatrix::identity(3);
    HilbertComplex c({E3, E3, E3}, {LinearRelation::from_matrix(a, E3, E3),
                                    LinearRelation::from_matrix(a, E3, E3)});
    CHECK_FALSE(c.is_valid());
    REQUIRE(c.diagnostics().degrees.size() == 1);
    CHECK(c.diagnostics().degrees[0].q == 0);
    CHECK(c.diagnostics().degrees[0].range_in_next_domain);
    CHECK_FALSE(c.diagnostics().degrees[0].images_sent_to_zero);
    CHECK_FALSE(c.diagnostics().degrees[0].composition_vanishes);
    CHECK_THROWS_AS(cohomology(c, 0), Error);
    CHECK_THROWS_AS(dual(c), Error);
    CHECK_THROWS_AS(laplacian(c, 0), Error);
    CHECK_THROWS_AS(hodge_decompose(c, 0), Error);
}

TEST_CASE("restricted-domain complexes validate") {
    CHECK(interval_minimal().is_valid());
    CHECK(triangle_minimal().is_valid());
}

TEST_CASE("out-of-range degrees behave as zero spaces and zero maps") {
    HilbertComplex c = interval_absolute();
    CHECK(c.space(-1).dim() == 0);
    CHECK(c.space(2).dim() == 0);
    CHECK(c.space(0).dim() == 3);
    LinearRelation below = c.diff(-1);
    CHECK(below.from().dim() == 0);
    CHECK(below.to().dim() == 3);
    CHECK(is_everywhere_defined(below));
    LinearRelation top = c.diff(1);
    CHECK(top.from().dim() == 2);
    CHECK(top.to().dim() == 0);
    CHECK(is_everywhere_defined(top));
    CHECK(kernel_inclusive(top) == Subspace::full(2));
}

TEST_CASE("circle cohomology is (1, 1)") {
    HilbertComplex c = circle();
    CHECK(cohomology_dims(c) == std::vector<int>{1, 1});
    CohomologyResult h0 = cohomology(c, 0);
    CHECK(h0.harmonic.dim() == 1);
    CHECK(h0.harmonic.contains({Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("interval cohomology: absolute (1, 0), minimal (0, 1)") {
    CHECK(cohomology_dims(interval_absolute()) == std::vector<int>{1, 0});
    CHECK(cohomology_dims(interval_minimal()) == std::vector<int>{0, 1});
}

TEST_CASE("relative cochain complex on its own spaces has cohomology (0, 1)") {
    // Interior vertex only at degree 0, both edges at degree 1; the relative
    // coboundary sends the interior vertex to (1, -1).
    RatMatrix d_rel = RatMatrix::from_int({{1}, {-1}});
    HilbertComplex c({E1, E2}, {LinearRelation::from_matrix(d_rel, E1, E2)});
    CHECK(c.is_valid());
    CHECK(cohomology_dims(c) == std::vector<int>{0, 1});
}

TEST_CASE("harmonic dimension always matches the quotient dimension") {
    for (const HilbertComplex& c :
         {interval_absolute(), interval_minimal(), circle(), triangle_minimal()}) {
        for (int q = 0; q <= c.length(); ++q) {
            CohomologyResult h = cohomology(c, q);
            CHECK(h.dim == h.harmonic.dim());
        }
    }
}

TEST_CASE("dual reverses spaces and preserves cohomology dimensions") {
    HilbertComplex c = circle();
    HilbertComplex d = dual(c);
    CHECK(d.is_valid());
    CHECK(cohomology_dims(d) == std::vector<int>{1, 1});
    CHECK(dual(d) == c);

    HilbertComplex i = interval_absolute();
    CHECK(cohomology_dims(dual(i)) == std::vector<int>{0, 1});
    CHECK(dual(dual(i)) == i);
}

TEST_CASE("dual of a complex with zero-domain differentials stays valid") {
    // Adjoints of zero-domain maps are full relations; compositions of full
    // relations relate everything to everything, and in particular relate
    // every domain vector to zero, which is the chain condition that
    // survives dualization.
    HilbertComplex c = triangle_minimal();
    HilbertComplex d = dual(c);
    CHECK(d.is_valid());
    CHECK(cohomology_dims(c) == std::vector<int>{0, 0, 1});
    CHECK(cohomology_dims(d) == std::vector<int>{1, 0, 0});
    CHECK(dual(d) == c);
}

TEST_CASE("laplacian of the path graph is the classical graph laplacian") {
    HilbertComplex c = interval_absolute();
    LinearRelation delta0 = laplacian(c, 0);
    CHECK(to_matrix(delta0) ==
          RatMatrix::from_int({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}}));
    CHECK(kernel_inclusive(delta0) ==
          Subspace::from_rows(RatMatrix::from_int({{1, 1, 1}}), 3));
    CHECK(to_matrix(laplacian(c, 1)) == RatMatrix::from_int({{2, -1}, {-1, 2}}));
}

TEST_CASE("laplacian of a zero complex is the zero relation on the zero space") {
    InnerProductSpace z = InnerProductSpace::euclidean(0);
    HilbertComplex c({z, z}, {LinearRelation::zero_map(z, z)});
    LinearRelation delta = laplacian(c, 0);
    CHECK(delta.graph().dim() == 0);
    CHECK(delta.from().dim() == 0);
}

TEST_CASE("weak hodge decomposition on the circle") {
    HilbertComplex c = circle();
    HodgeTriple q1 = hodge_decompose(c, 1);
    CHECK(q1.harmonic.dim() == 1);
    CHECK(q1.image_d.dim() == 2);
    CHECK(q1.image_delta.dim() == 0);
    CHECK(q1.orthogonal);
    CHECK(q1.spans);
    CHECK(q1.harmonic_is_laplace_kernel);
    CHECK(q1.images_are_laplace_image);

    HodgeTriple q0 = hodge_decompose(interval_absolute(), 0);
    CHECK(q0.harmonic.dim() == 1);
    CHECK(q0.image_d.dim() == 0);
    CHECK(q0.image_delta.dim() == 2);
    CHECK(q0.orthogonal);
    CHECK(q0.spans);
}

TEST_CASE("zero differentials make everything harmonic") {
    HilbertComplex c({E3, E2}, {LinearRelation::zero_map(E3, E2)});
    HodgeTriple t = hodge_decompose(c, 0);
    CHECK(t.harmonic == Subspace::full(3));
    CHECK(t.image_d.dim() == 0);
    CHECK(t.image_delta.dim() == 0);
    CHECK(t.spans);
}

TEST_CASE("hodge decomposition respects a weighted gram") {
    // Circle with edge weights (1, 1, 2): the degree-1 harmonic line tilts to
    // span{(2, -2, 1)}, the exact solution of d0^T G v = 0.
    InnerProductSpace edges(3, RatMatrix::from_int({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    HilbertComplex c({E3, edges}, {LinearRelation::from_matrix(d_circle, E3, edges)});
    HodgeTriple t = hodge_decompose(c, 1);
    CHECK(t.harmonic.dim() == 1);
    CHECK(t.harmonic.contains({Rational(2), Rational(-2), Rational(1)}));
    CHECK(t.orthogonal);
    CHECK(t.spans);
    CHECK(t.harmonic_is_laplace_kernel);
}

TEST_CASE("fredholm predicates are witnessed trivially in finite dimension") {
    FredholmWitness w = fredholm_witness(circle());
    CHECK(w.images_closed);
    CHECK(w.cohomology_finite);
    CHECK(w.fredholm);
    CHECK(w.weak_fredholm);
}

TEST_CASE("euler characteristic matches alternating domain dimensions") {
    CHECK(euler_characteristic(circle()) == 0);
    CHECK(euler_characteristic(interval_absolute()) == 1);
    // Minimal complexes count domains, not spaces: the 1-edge interval's
    // minimal complex has empty degree-0 domain, so chi = 0 - 1.
    InnerProductSpace v = InnerProductSpace::euclidean(2);
    HilbertComplex one_edge_min(
        {v, E1}, {LinearRelation::from_matrix(RatMatrix::from_int({{-1, 1}}),
                                              Subspace::zero(2), v, E1)});
    CHECK(euler_characteristic(one_edge_min) == -1);
    // With every differential everywhere defined, the alternating sum of
    // space dimensions gives the same number.
    CHECK(euler_characteristic(interval_absolute()) == 3 - 2);
    CHECK(euler_characteristic(circle()) == 3 - 3);
}

TEST_CASE("cohomology rejects out-of-range degrees") {
    HilbertComplex c = circle();
    CHECK_THROWS_AS(cohomology(c, -1), Error);
    CHECK_THROWS_AS(cohomology(c, 2), Error);
    CHECK_THROWS_AS(laplacian(c, 5), Error);
}

TEST_CASE("single-space complex") {
    HilbertComplex c({E2}, {});
    CHECK(c.is_valid());
    CHECK(c.length() == 0);
    CHECK(cohomology_dims(c) == std::vector<int>{2});
    CHECK(euler_characteristic(c) == 2);
}
