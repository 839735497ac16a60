#pragma once

#include <vector>

#include "hodgepair/relation.hpp"

namespace hodgepair {

/// Per-degree validity diagnostics for the pair (d_q, d_{q+1}).
struct DegreeDiagnostic {
    int q = 0;
    /// ran(d_q) contained in dom(d_{q+1}).
    bool range_in_next_domain = false;
    /// ran(d_q) contained in ker_inclusive(d_{q+1}); for single-valued
    /// differentials this is exactly "the composition is zero", and it is the
    /// reading that survives passage to dual complexes, where compositions of
    /// multivalued adjoints can relate a vector to plenty of nonzero values
    /// while still relating everything in sight to 0.
    bool images_sent_to_zero = false;
    /// dom(d_{q+1} o d_q) contained in ker_inclusive(d_{q+1} o d_q);
    /// implied by the previous flag, recorded for visibility.
    bool composition_vanishes = false;
};

/// Diagnostics are values: an invalid complex is reported, not thrown, and
/// only the operations that depend on validity reject it.
struct ComplexDiagnostics {
    bool valid = false;
    std::vector<DegreeDiagnostic> degrees;
};

/// A bounded complex of finite-dimensional inner-product spaces
///   h_0 -d_0-> h_1 -d_1-> ... -d_{n-1}-> h_n
/// whose differentials are linear relations (so restricted domains and
/// multivalued adjoints are representable). Degrees outside [0, n] behave as
/// zero spaces with everywhere-defined zero differentials.
class HilbertComplex {
public:
    HilbertComplex() = default;

    /// spaces.size() must be diffs.size() + 1, and diff q must go from
    /// spaces[q] to spaces[q+1]. Shape violations throw; chain-condition
    /// violations do not (see validate()).
    HilbertComplex(std::vector<InnerProductSpace> spaces,
                   std::vector<LinearRelation> diffs);

    /// Top degree n (spaces run h_0..h_n).
    int length() const { return static_cast<int>(spaces_.size()) - 1; }

    /// Space at degree q; the zero space outside [0, n].
    const InnerProductSpace& space(int q) const;

    /// Differential d_q : h_q -> h_{q+1}; outside [0, n-1] the
    /// everywhere-defined zero map between the conventional spaces.
    LinearRelation diff(int q) const;

    /// Adjoint differential delta_q := (d_{q-1})^*, going h_q -> h_{q-1}.
    LinearRelation delta(int q) const;

    const ComplexDiagnostics& diagnostics() const { return diagnostics_; }
    bool is_valid() const { return diagnostics_.valid; }

    bool operator==(const HilbertComplex& rhs) const;

private:
    std::vector<InnerProductSpace> spaces_;
    std::vector<LinearRelation> diffs_;
    ComplexDiagnostics diagnostics_;
};

/// The diagnostics of c (computed at construction; this accessor exists so
/// the result can be reported without poking at the class).
ComplexDiagnostics validate(const HilbertComplex& c);

struct CohomologyResult {
    /// dim ker(d_q) - dim Im(d_{q-1}), kernels inclusive.
    int dim = 0;
    /// ker(d_q) intersected with ker(delta_q): the harmonic vectors. For a
    /// valid complex its dimension equals `dim` (finite dimension makes
    /// reduced and unreduced cohomology coincide).
    Subspace harmonic;
};

/// Cohomology at degree q (0 <= q <= n). Throws on invalid complexes and
/// out-of-range degrees.
CohomologyResult cohomology(const HilbertComplex& c, int q);

/// All cohomology dimensions, degrees 0..n.
std::vector<int> cohomology_dims(const HilbertComplex& c);

/// Dual complex: spaces reversed, differential j is adjoint(d_{n-1-j}).
/// The dual of a valid complex is valid, and dual(dual(c)) == c.
HilbertComplex dual(const HilbertComplex& c);

/// Hodge-Laplace relation Delta_q = d_{q-1} o delta_q + delta_{q+1} o d_q,
/// whose domain clause (images of d_q land in dom(delta_{q+1}), some image
/// under delta_q lands in dom(d_{q-1})) is realized by relation composition
/// and sum themselves.
LinearRelation laplacian(const HilbertComplex& c, int q);

/// The three summands of the weak Hodge decomposition at degree q, plus the
/// exactness checks tying them to the Laplacian. For a valid complex all
/// check flags are true; they are recorded rather than assumed so theorem
/// verdicts can cite them.
struct HodgeTriple {
    Subspace harmonic;     // ker d_q  meet  ker delta_q
    Subspace image_d;      // Im d_{q-1}
    Subspace image_delta;  // Im delta_{q+1}
    bool orthogonal = false;          // the three parts are pairwise Gram-orthogonal
    bool spans = false;               // their sum is the whole space
    bool harmonic_is_laplace_kernel = false;  // harmonic == ker Delta_q
    bool images_are_laplace_image = false;    // image_d + image_delta == Im Delta_q
};

HodgeTriple hodge_decompose(const HilbertComplex& c, int q);

/// In finite dimension every subspace is closed and every cohomology space
/// finite-dimensional, so the Fredholm predicates of the continuous theory
/// are witnessed trivially; the struct keeps them in the vocabulary so
/// hypothesis flags can cite them.
struct FredholmWitness {
    bool images_closed = true;
    bool cohomology_finite = true;
    bool fredholm = true;
    bool weak_fredholm = true;
};

FredholmWitness fredholm_witness(const HilbertComplex& c);

/// Alternating sum of cohomology dimensions. Equals the alternating sum of
/// domain dimensions (and of space dimensions when every differential is
/// everywhere defined).
int euler_characteristic(const HilbertComplex& c);

}  // namespace hodgepair
