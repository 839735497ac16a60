#include "hodgepair/complex.hpp"

#include <utility>

namespace hodgepair {

namespace {

const InnerProductSpace& zero_space() {
    static const InnerProductSpace z(0, RatMatrix(0, 0));
    return z;
}

ComplexDiagnostics run_diagnostics(const HilbertComplex& c) {
    ComplexDiagnostics out;
    out.valid = true;
    for (int q = 0; q + 1 <= c.length() - 1; ++q) {
        const LinearRelation d_here = c.diff(q);
        const LinearRelation d_next = c.diff(q + 1);
        DegreeDiagnostic diag;
        diag.q = q;
        const Subspace image = range_of(d_here);
        diag.range_in_next_domain = domain_of(d_next).contains(image);
        diag.images_sent_to_zero = kernel_inclusive(d_next).contains(image);
        const LinearRelation comp = compose(d_next, d_here);
        diag.composition_vanishes = kernel_inclusive(comp).contains(domain_of(comp));
        out.valid = out.valid && diag.range_in_next_domain && diag.images_sent_to_zero &&
                    diag.composition_vanishes;
        out.degrees.push_back(diag);
    }
    return out;
}

void require_valid(const HilbertComplex& c) {
    if (!c.is_valid()) {
        throw Error("operation requires a valid complex (see its diagnostics)");
    }
}

void require_degree(const HilbertComplex& c, int q) {
    if (q < 0 || q > c.length()) {
        throw Error("degree out of range");
    }
}

}  // namespace

HilbertComplex::HilbertComplex(std::vector<InnerProductSpace> spaces,
                               std::vector<LinearRelation> diffs) {
    if (spaces.empty()) {
        throw Error("a complex needs at least one space");
    }
    if (diffs.size() + 1 != spaces.size()) {
        throw Error("a complex over h_0..h_n needs exactly n differentials");
    }
    for (std::size_t q = 0; q < diffs.size(); ++q) {
        if (!(diffs[q].from() == spaces[q]) || !(diffs[q].to() == spaces[q + 1])) {
            throw Error("differential spaces do not match the complex's spaces");
        }
    }
    spaces_ = std::move(spaces);
    diffs_ = std::move(diffs);
    diagnostics_ = run_diagnostics(*this);
}

const InnerProductSpace& HilbertComplex::space(int q) const {
    if (q < 0 || q > length()) {
        return zero_space();
    }
    return spaces_[static_cast<std::size_t>(q)];
}

LinearRelation HilbertComplex::diff(int q) const {
    if (q >= 0 && q <= length() - 1) {
        return diffs_[static_cast<std::size_t>(q)];
    }
    return LinearRelation::zero_map(space(q), space(q + 1));
}

LinearRelation HilbertComplex::delta(int q) const { return adjoint(diff(q - 1)); }

bool HilbertComplex::operator==(const HilbertComplex& rhs) const {
    return spaces_ == rhs.spaces_ && diffs_ == rhs.diffs_;
}

ComplexDiagnostics validate(const HilbertComplex& c) { return c.diagnostics(); }

CohomologyResult cohomology(const HilbertComplex& c, int q) {
    require_valid(c);
    require_degree(c, q);
    CohomologyResult out;
    const Subspace kernel = kernel_inclusive(c.diff(q));
    const Subspace image = range_of(c.diff(q - 1));
    out.dim = kernel.dim() - image.dim();
    out.harmonic = subspace_meet(kernel, kernel_inclusive(c.delta(q)));
    return out;
}

std::vector<int> cohomology_dims(const HilbertComplex& c) {
    std::vector<int> dims;
    for (int q = 0; q <= c.length(); ++q) {
        dims.push_back(cohomology(c, q).dim);
    }
    return dims;
}

HilbertComplex dual(const HilbertComplex& c) {
    require_valid(c);
    const int n = c.length();
    std::vector<InnerProductSpace> spaces;
    std::vector<LinearRelation> diffs;
    for (int j = 0; j <= n; ++j) {
        spaces.push_back(c.space(n - j));
    }
    for (int j = 0; j <= n - 1; ++j) {
        diffs.push_back(adjoint(c.diff(n - 1 - j)));
    }
    return HilbertComplex(std::move(spaces), std::move(diffs));
}

LinearRelation laplacian(const HilbertComplex& c, int q) {
    require_valid(c);
    require_degree(c, q);
    const LinearRelation down = compose(c.diff(q - 1), c.delta(q));
    const LinearRelation up = compose(c.delta(q + 1), c.diff(q));
    return add(down, up);
}

HodgeTriple hodge_decompose(const HilbertComplex& c, int q) {
    require_valid(c);
    require_degree(c, q);
    HodgeTriple out;
    out.harmonic =
        subspace_meet(kernel_inclusive(c.diff(q)), kernel_inclusive(c.delta(q)));
    out.image_d = range_of(c.diff(q - 1));
    out.image_delta = range_of(c.delta(q + 1));

    const InnerProductSpace& space = c.space(q);
    auto orthogonal = [&space](const Subspace& a, const Subspace& b) {
        for (int i = 0; i < a.dim(); ++i) {
            for (int j = 0; j < b.dim(); ++j) {
                if (space.inner(a.basis().row(i), b.basis().row(j)) != 0) {
                    return false;
                }
            }
        }
        return true;
    };
    out.orthogonal = orthogonal(out.harmonic, out.image_d) &&
                     orthogonal(out.harmonic, out.image_delta) &&
                     orthogonal(out.image_d, out.image_delta);
    const Subspace images = subspace_sum(out.image_d, out.image_delta);
    out.spans = subspace_sum(out.harmonic, images).dim() == space.dim();

    const LinearRelation delta_q = laplacian(c, q);
    out.harmonic_is_laplace_kernel = out.harmonic == kernel_inclusive(delta_q);
    out.images_are_laplace_image = images == range_of(delta_q);
    return out;
}

FredholmWitness fredholm_witness(const HilbertComplex&) { return FredholmWitness{}; }

int euler_characteristic(const HilbertComplex& c) {
    int chi = 0;
    int sign = 1;
    for (int dim : cohomology_dims(c)) {
        chi += sign * dim;
        sign = -sign;
    }
    return chi;
}

}  // namespace hodgepair
