#include "hodgepair/pair.hpp"

#include <sstream>
#include <utility>

namespace hodgepair {

namespace {

std::string format_vector(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << format_rational(v[i]);
    }
    out << ")";
    return out.str();
}

/// ker P_q with out-of-range degrees collapsing to the zero space.
Subspace ker_p_at(const ComplexPair& p, int q, KernelMode mode) {
    if (q < 0 || q > p.length()) {
        return Subspace::zero(p.space(q).dim());
    }
    return kernel_of(build_P(p, q), mode);
}

/// Direct sum of a in the first block and b in the second block of
/// Q^(first + second).
Subspace block_sum(const Subspace& a, const Subspace& b) {
    const int total = a.ambient_dim() + b.ambient_dim();
    RatMatrix rows(a.dim() + b.dim(), total);
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.ambient_dim(); ++c) {
            rows.at(r, c) = a.basis().at(r, c);
        }
    }
    for (int r = 0; r < b.dim(); ++r) {
        for (int c = 0; c < b.ambient_dim(); ++c) {
            rows.at(a.dim() + r, a.ambient_dim() + c) = b.basis().at(r, c);
        }
    }
    return Subspace::from_rows(rows, total);
}

/// Coordinates of the class of w in the quotient model: w = (model part) +
/// (denominator part); returns the model coordinates, or nullopt when w is
/// not in model + denominator.
std::optional<std::vector<Rational>> class_coords(const Subspace& model,
                                                  const Subspace& denominator,
                                                  const std::vector<Rational>& w) {
    const RatMatrix columns =
        model.basis().transpose().augmented(denominator.basis().transpose());
    const auto solution = solve(columns, w);
    if (!solution) {
        return std::nullopt;
    }
    return std::vector<Rational>(solution->begin(), solution->begin() + model.dim());
}

int matrix_rank(const RatMatrix& m) { return rref(m).rank; }

/// Shared construction for the induced quotient morphisms: the relation
/// `inducer` (delta_{q,M}) restricted so its images land in `kernel`, made
/// into a map  numerator/denominator -> kernel/image  on orthocomplement
/// models of both quotients.
QuotientMorphism build_quotient_morphism(const Subspace& numerator,
                                         const Subspace& denominator,
                                         const LinearRelation& inducer,
                                         const Subspace& kernel, const Subspace& image,
                                         const InnerProductSpace& domain_space,
                                         const InnerProductSpace& codomain_space) {
    QuotientMorphism out;

    // Force the images into the kernel: R = graph(inducer) meet (num (+) ker).
    const LinearRelation forced = LinearRelation::from_graph(
        inducer.from(), inducer.to(),
        subspace_meet(inducer.graph(), block_sum(numerator, kernel)));

    out.checks.domain_covered = domain_of(forced) == numerator;
    out.checks.denominator_inside = numerator.contains(denominator);
    out.checks.denominator_killed =
        image.contains(range_of(restrict_domain(forced, denominator)));
    out.checks.ambiguity_collapses = image.contains(mul_of(forced));

    const Subspace dom_model =
        subspace_meet(numerator, orthocomplement(denominator, domain_space));
    const Subspace cod_model =
        subspace_meet(kernel, orthocomplement(image, codomain_space));
    out.domain_dim = dom_model.dim();
    out.codomain_dim = cod_model.dim();
    out.matrix = RatMatrix(out.codomain_dim, out.domain_dim);

    bool columns_ok = true;
    for (int j = 0; j < dom_model.dim(); ++j) {
        const auto w = image_of(forced, dom_model.basis().row(j));
        if (!w) {
            columns_ok = false;
            continue;
        }
        const auto coords = class_coords(cod_model, image, *w);
        if (!coords) {
            columns_ok = false;
            continue;
        }
        for (int i = 0; i < out.codomain_dim; ++i) {
            out.matrix.at(i, j) = (*coords)[static_cast<std::size_t>(i)];
        }
    }

    out.well_defined = out.checks.all() && columns_ok;
    const int rank = matrix_rank(out.matrix);
    out.injective = rank == out.domain_dim;
    out.surjective = rank == out.codomain_dim;
    return out;
}

/// Extend an induced morphism by the harmonic summand: columns for a basis
/// of `harmonic` are the classes of the basis vectors themselves.
QuotientMorphism augment_with_harmonic(const QuotientMorphism& induced,
                                       const Subspace& harmonic,
                                       const Subspace& kernel, const Subspace& image,
                                       const InnerProductSpace& codomain_space) {
    QuotientMorphism out;
    out.checks = induced.checks;
    out.domain_dim = induced.domain_dim + harmonic.dim();
    out.codomain_dim = induced.codomain_dim;

    const Subspace cod_model =
        subspace_meet(kernel, orthocomplement(image, codomain_space));
    out.matrix = RatMatrix(out.codomain_dim, out.domain_dim);
    for (int i = 0; i < out.codomain_dim; ++i) {
        for (int j = 0; j < induced.domain_dim; ++j) {
            out.matrix.at(i, j) = induced.matrix.at(i, j);
        }
    }
    bool columns_ok = true;
    for (int j = 0; j < harmonic.dim(); ++j) {
        const auto coords = class_coords(cod_model, image, harmonic.basis().row(j));
        if (!coords) {
            columns_ok = false;
            continue;
        }
        for (int i = 0; i < out.codomain_dim; ++i) {
            out.matrix.at(i, induced.domain_dim + j) =
                (*coords)[static_cast<std::size_t>(i)];
        }
    }
    out.well_defined = induced.well_defined && columns_ok;
    const int rank = matrix_rank(out.matrix);
    out.injective = rank == out.domain_dim;
    out.surjective = rank == out.codomain_dim;
    return out;
}

}  // namespace

Subspace kernel_of(const LinearRelation& t, KernelMode mode) {
    return mode == KernelMode::inclusive ? kernel_inclusive(t) : kernel_strict(t);
}

ComplexPair::ComplexPair(HilbertComplex big, HilbertComplex small)
    : big_(std::move(big)), small_(std::move(small)) {
    if (big_.length() != small_.length()) {
        throw Error("pair members must have the same length");
    }
    for (int q = 0; q <= big_.length(); ++q) {
        if (!(big_.space(q) == small_.space(q))) {
            throw Error("pair members must share their spaces (degree " +
                        std::to_string(q) + " differs)");
        }
    }
    if (!big_.is_valid()) {
        throw Error("the big complex of a pair must be valid");
    }
    if (!small_.is_valid()) {
        throw Error("the small complex of a pair must be valid");
    }
    for (int q = 0; q < big_.length(); ++q) {
        const LinearRelation small_d = small_.diff(q);
        if (!small_d.contained_in(big_.diff(q))) {
            // Quote the first offending graph vector.
            std::string witness = "?";
            for (int r = 0; r < small_d.graph().dim(); ++r) {
                const std::vector<Rational> row = small_d.graph().basis().row(r);
                if (!big_.diff(q).graph().contains(row)) {
                    const int nf = small_d.from().dim();
                    std::vector<Rational> u(row.begin(), row.begin() + nf);
                    std::vector<Rational> v(row.begin() + nf, row.end());
                    witness = format_vector(u) + " -> " + format_vector(v);
                    break;
                }
            }
            throw Error("small differential at degree " + std::to_string(q) +
                        " is not a restriction of the big one; witness " + witness);
        }
    }
}

ComplexPair make_pair(HilbertComplex big, HilbertComplex small) {
    return ComplexPair(std::move(big), std::move(small));
}

MixedDeltas mixed_deltas(const ComplexPair& p, int q) {
    MixedDeltas out{adjoint(p.big().diff(q - 1)), adjoint(p.small().diff(q - 1))};
    if (!out.delta_m.contained_in(out.delta_M)) {
        throw Error("adjoint inclusion failed; the pair invariant is broken");
    }
    return out;
}

LinearRelation build_P(const ComplexPair& p, int q) {
    const LinearRelation delta_M_here = adjoint(p.small().diff(q - 1));
    const LinearRelation delta_M_up = adjoint(p.small().diff(q));
    const LinearRelation down = compose(p.big().diff(q - 1), delta_M_here);
    const LinearRelation up = compose(delta_M_up, p.big().diff(q));
    return add(down, up);
}

HarmonicData harmonic_complexes(const ComplexPair& p, KernelMode mode) {
    const int n = p.length();
    HarmonicData out;

    for (int q = 0; q <= n; ++q) {
        out.ker_p.push_back(kernel_of(build_P(p, q), mode));
    }
    for (int q = 0; q <= n; ++q) {
        out.abs_diff.push_back(restrict_domain(p.big().diff(q), out.ker_p[q]));
        out.rel_diff.push_back(restrict_domain(p.small().diff(q), out.ker_p[q]));
    }

    out.abs_chain_ok = true;
    out.rel_chain_ok = true;
    for (int q = 0; q <= n; ++q) {
        ChainChecks checks;
        const Subspace next =
            q + 1 <= n ? out.ker_p[q + 1] : Subspace::zero(p.space(q + 1).dim());
        const Subspace prev =
            q - 1 >= 0 ? out.ker_p[q - 1] : Subspace::zero(p.space(q - 1).dim());
        checks.image_stays_in_kernel = next.contains(range_of(out.abs_diff[q]));
        const LinearRelation delta_M = adjoint(p.small().diff(q - 1));
        checks.adjoint_image_stays_in_kernel =
            prev.contains(range_of(restrict_domain(delta_M, out.ker_p[q])));
        checks.small_image_stays_in_kernel = next.contains(range_of(out.rel_diff[q]));
        out.abs_chain_ok = out.abs_chain_ok && checks.image_stays_in_kernel;
        out.rel_chain_ok = out.rel_chain_ok && checks.small_image_stays_in_kernel;
        out.chain_checks.push_back(checks);
    }

    for (int q = 0; q <= n; ++q) {
        const Subspace kernel_abs = kernel_of(out.abs_diff[q], mode);
        const Subspace incoming_abs = q - 1 >= 0
                                          ? range_of(out.abs_diff[q - 1])
                                          : Subspace::zero(p.space(q).dim());
        out.abs_forced.push_back(!kernel_abs.contains(incoming_abs));
        out.h_abs.push_back(kernel_abs.dim() -
                            subspace_meet(kernel_abs, incoming_abs).dim());

        const Subspace kernel_rel = kernel_of(out.rel_diff[q], mode);
        const Subspace incoming_rel = q - 1 >= 0
                                          ? range_of(out.rel_diff[q - 1])
                                          : Subspace::zero(p.space(q).dim());
        out.rel_forced.push_back(!kernel_rel.contains(incoming_rel));
        out.h_rel.push_back(kernel_rel.dim() -
                            subspace_meet(kernel_rel, incoming_rel).dim());
    }

    for (int q = 0; q <= n; ++q) {
        const LinearRelation delta_m = adjoint(p.big().diff(q - 1));
        out.min_harmonic.push_back(subspace_meet(kernel_of(p.small().diff(q), mode),
                                                 kernel_of(delta_m, mode)));
        const Subspace kernel_small = kernel_of(p.small().diff(q), mode);
        const Subspace image_in_domain = subspace_meet(
            subspace_meet(range_of(p.big().diff(q - 1)), domain_of(p.small().diff(q))),
            kernel_small);
        out.image_map_dim.push_back(kernel_small.dim() - image_in_domain.dim());
    }
    return out;
}

QuotientMorphisms quotient_morphisms(const ComplexPair& p, int q, KernelMode mode) {
    const Subspace ker_p = ker_p_at(p, q, mode);
    const Subspace ker_p_prev = ker_p_at(p, q - 1, mode);

    const Subspace image_abs = range_of(p.big().diff(q - 1));
    const Subspace image_rel = range_of(p.small().diff(q - 1));
    const Subspace numerator_abs = subspace_meet(ker_p, image_abs);
    const Subspace numerator_rel = subspace_meet(ker_p, image_rel);
    const Subspace denominator_abs =
        range_of(restrict_domain(p.big().diff(q - 1), ker_p_prev));
    const Subspace denominator_rel =
        range_of(restrict_domain(p.small().diff(q - 1), ker_p_prev));

    const LinearRelation delta_M = adjoint(p.small().diff(q - 1));
    const Subspace kernel_cod = kernel_of(p.big().diff(q - 1), mode);
    const Subspace image_cod = range_of(p.big().diff(q - 2));

    const LinearRelation delta_m_prev = adjoint(p.big().diff(q - 2));
    const Subspace harmonic_prev = subspace_meet(
        kernel_of(p.small().diff(q - 1), mode), kernel_of(delta_m_prev, mode));

    QuotientMorphisms out;
    out.induced_abs =
        build_quotient_morphism(numerator_abs, denominator_abs, delta_M, kernel_cod,
                                image_cod, p.space(q), p.space(q - 1));
    out.induced_rel =
        build_quotient_morphism(numerator_rel, denominator_rel, delta_M, kernel_cod,
                                image_cod, p.space(q), p.space(q - 1));
    out.augmented_abs = augment_with_harmonic(out.induced_abs, harmonic_prev,
                                              kernel_cod, image_cod, p.space(q - 1));
    out.augmented_rel = augment_with_harmonic(out.induced_rel, harmonic_prev,
                                              kernel_cod, image_cod, p.space(q - 1));
    return out;
}

PairAnalysis analyze(const ComplexPair& p, KernelMode mode) {
    PairAnalysis out;
    out.mode = mode;
    out.harmonics = harmonic_complexes(p, mode);
    const int n = p.length();

    for (int q = 0; q <= n; ++q) {
        DegreeDims row;
        row.q = q;
        row.H_M = cohomology(p.big(), q).dim;
        row.H_m = cohomology(p.small(), q).dim;
        row.kerDelta_M = kernel_of(laplacian(p.big(), q), mode).dim();
        row.kerDelta_m = kernel_of(laplacian(p.small(), q), mode).dim();
        row.kerP = out.harmonics.ker_p[q].dim();
        row.hPrime = out.harmonics.h_abs[q];
        row.hDoublePrime = out.harmonics.h_rel[q];
        row.curlyHm = out.harmonics.min_harmonic[q].dim();
        row.imageMap = out.harmonics.image_map_dim[q];
        out.dims.push_back(row);
    }

    out.minimal_domains_dense = true;
    out.coarse = false;
    for (int q = 0; q <= n - 1; ++q) {
        const int dom_dim = domain_of(p.small().diff(q)).dim();
        const bool dense = dom_dim == p.space(q).dim();
        out.dense_by_degree.push_back(dense);
        out.minimal_domains_dense = out.minimal_domains_dense && dense;
        if (dom_dim == 0 && p.space(q).dim() > 0) {
            out.coarse = true;
        }
    }
    return out;
}

}  // namespace hodgepair
