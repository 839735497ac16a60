#pragma once

#include <vector>

#include "hodgepair/complex.hpp"

namespace hodgepair {

/// Which kernel notion the harmonic machinery uses for relations.
/// Inclusive ({u : (u,0) in graph}) is the default everywhere; strict
/// collapses to {0} for genuinely multivalued relations and is kept for
/// comparison runs.
enum class KernelMode { inclusive, strict };

Subspace kernel_of(const LinearRelation& t, KernelMode mode);

/// A nested pair of complexes on the same spaces: `small` restricts the
/// domains of `big` (graph of each small differential contained in the big
/// one). The big complex plays the maximal extension, the small one the
/// minimal extension.
class ComplexPair {
public:
    /// Validates: same space sequence, both complexes valid, and per-degree
    /// graph inclusion. Violations throw Error; the extension check quotes a
    /// witness vector from the offending graph.
    ComplexPair(HilbertComplex big, HilbertComplex small);

    const HilbertComplex& big() const { return big_; }
    const HilbertComplex& small() const { return small_; }
    int length() const { return big_.length(); }
    const InnerProductSpace& space(int q) const { return big_.space(q); }

private:
    HilbertComplex big_;
    HilbertComplex small_;
};

/// Spec-facing constructor name.
ComplexPair make_pair(HilbertComplex big, HilbertComplex small);

/// The two mixed adjoints at degree q: delta_m crosses to the adjoint of the
/// big differential, delta_M to the adjoint of the small one, so
/// graph(delta_m) is contained in graph(delta_M) (adjoint reverses the
/// inclusion of graphs).
struct MixedDeltas {
    LinearRelation delta_m;  // adjoint of d_{q-1, big}
    LinearRelation delta_M;  // adjoint of d_{q-1, small}
};

MixedDeltas mixed_deltas(const ComplexPair& p, int q);

/// The mixed Laplace-type relation
///   P_q = d_{q-1,M} o delta_{q,M} + delta_{q+1,M} o d_{q,M};
/// relation composition and sum realize its domain clause (s in both
/// domains, d_{q,M}s lands in dom(delta_{q+1,M}), and some image of s under
/// delta_{q,M} lands in dom(d_{q-1,M})).
LinearRelation build_P(const ComplexPair& p, int q);

/// Chain-condition checks at degree q. These are theorems under density of
/// the minimal domains; on general relation pairs they are recorded, and a
/// failure downgrades the derived complex to forced-intersection cohomology.
struct ChainChecks {
    bool image_stays_in_kernel = false;        // d_{q,M}(ker P_q) lands in ker P_{q+1}
    bool adjoint_image_stays_in_kernel = false;  // delta_{q,M}(ker P_q) lands in ker P_{q-1}
    bool small_image_stays_in_kernel = false;  // d_{q,m}(ker P_q) lands in ker P_{q+1}
};

/// Everything derived from the kernels of P_q: the harmonic-vector complex
/// (restriction of the big differentials to ker P), the relative harmonic
/// complex (restriction of the small ones), their cohomology dimensions, the
/// minimal harmonic spaces, and the image-map dimensions. Indexed q = 0..n.
struct HarmonicData {
    std::vector<Subspace> ker_p;
    std::vector<LinearRelation> abs_diff;  // d'_q  = d_{q,M} restricted to ker P_q
    std::vector<LinearRelation> rel_diff;  // d''_q = d_{q,m} restricted to ker P_q
    std::vector<int> h_abs;  // cohomology of the d' complex
    std::vector<int> h_rel;  // cohomology of the d'' complex
    /// ker(d_{q,m}) meet ker(delta_{q,m}): harmonic for the minimal pairing.
    std::vector<Subspace> min_harmonic;
    /// dim ker(d_{q,m}) - dim(Im(d_{q-1,M}) meet D(d_{q,m}) meet the kernel):
    /// the dimension of the image of degree-q small cohomology inside big
    /// cohomology, phrased without quotients.
    std::vector<int> image_map_dim;
    std::vector<ChainChecks> chain_checks;
    /// True when every degree passes the corresponding chain check, i.e. the
    /// derived complex genuinely is a complex.
    bool abs_chain_ok = false;
    bool rel_chain_ok = false;
    /// Degrees where incoming image was not inside the kernel and the
    /// cohomology formula forced the intersection.
    std::vector<bool> abs_forced;
    std::vector<bool> rel_forced;
};

HarmonicData harmonic_complexes(const ComplexPair& p,
                                KernelMode mode = KernelMode::inclusive);

/// Sub-checks behind a quotient morphism built from a possibly multivalued
/// relation. The morphism matrix is trustworthy only when all four hold.
struct WellDefinedChecks {
    bool domain_covered = false;      // every numerator vector has an image in the kernel
    bool denominator_inside = false;  // denominator sits inside the numerator
    bool denominator_killed = false;  // images of the denominator fall in the image part
    bool ambiguity_collapses = false;  // multivaluedness only moves within classes
    bool all() const {
        return domain_covered && denominator_inside && denominator_killed &&
               ambiguity_collapses;
    }
};

/// A linear map between two quotient spaces, each represented by the
/// Gram-orthocomplement of the denominator inside the numerator; the matrix
/// is written in those representative bases.
struct QuotientMorphism {
    int domain_dim = 0;
    int codomain_dim = 0;
    RatMatrix matrix;
    WellDefinedChecks checks;
    bool well_defined = false;
    bool injective = false;
    bool surjective = false;
};

/// The four morphisms at degree q induced by delta_{q,M}:
///  - induced_abs:  [ker P_q meet Im d_{q-1,M}] / Im d'_{q-1}
///                    -> ker d_{q-1,M} / Im d_{q-2,M}
///  - induced_rel:  [ker P_q meet Im d_{q-1,m}] / Im d''_{q-1} -> same codomain
///  - augmented_abs: domain of induced_abs (+) min_harmonic_{q-1} -> same
///  - augmented_rel: domain of induced_rel (+) min_harmonic_{q-1} -> same
/// The augmented maps add the class of the harmonic summand; the main
/// isomorphism statements assert they are bijections.
struct QuotientMorphisms {
    QuotientMorphism induced_abs;
    QuotientMorphism induced_rel;
    QuotientMorphism augmented_abs;
    QuotientMorphism augmented_rel;
};

QuotientMorphisms quotient_morphisms(const ComplexPair& p, int q,
                                     KernelMode mode = KernelMode::inclusive);

/// Per-degree dimension table; the names match the report schema.
struct DegreeDims {
    int q = 0;
    int H_M = 0;          // cohomology of the big complex
    int H_m = 0;          // cohomology of the small complex
    int kerDelta_M = 0;   // harmonic dimension of the big complex
    int kerDelta_m = 0;   // harmonic dimension of the small complex
    int kerP = 0;
    int hPrime = 0;       // cohomology of the d' complex
    int hDoublePrime = 0; // cohomology of the d'' complex
    int curlyHm = 0;      // dim of the minimal harmonic space
    int imageMap = 0;
};

/// One-stop analysis of a pair: the dims table plus hypothesis flags.
struct PairAnalysis {
    KernelMode mode = KernelMode::inclusive;
    HarmonicData harmonics;
    std::vector<DegreeDims> dims;  // q = 0..n
    /// dom(d_{q,small}) is the whole space for q = 0..n-1 (the discrete
    /// stand-in for density of the minimal domains).
    bool minimal_domains_dense = false;
    std::vector<bool> dense_by_degree;  // q = 0..n-1
    /// Some degree has an empty minimal domain inside a nonzero space: the
    /// small complex is too coarse to see that degree at all.
    bool coarse = false;
};

PairAnalysis analyze(const ComplexPair& p, KernelMode mode = KernelMode::inclusive);

}  // namespace hodgepair
