#include "hodgepair/relation.hpp"

namespace hodgepair {

namespace {

/// Gram of the product space from (+) to: block-diagonal.
RatMatrix product_gram(const InnerProductSpace& from, const InnerProductSpace& to) {
    const int n = from.dim() + to.dim();
    RatMatrix g(n, n);
    for (int r = 0; r < from.dim(); ++r) {
        for (int c = 0; c < from.dim(); ++c) {
            g.at(r, c) = from.gram().at(r, c);
        }
    }
    for (int r = 0; r < to.dim(); ++r) {
        for (int c = 0; c < to.dim(); ++c) {
            g.at(from.dim() + r, from.dim() + c) = to.gram().at(r, c);
        }
    }
    return g;
}

/// Project the rows of a basis of a subspace of A (+) B (+) ... onto a
/// contiguous coordinate window, re-canonicalizing the result.
Subspace project_rows(const Subspace& s, int offset, int width) {
    RatMatrix rows(s.dim(), width);
    for (int r = 0; r < s.dim(); ++r) {
        for (int c = 0; c < width; ++c) {
            rows.at(r, c) = s.basis().at(r, offset + c);
        }
    }
    return Subspace::from_rows(rows, width);
}

/// Embed the rows of `s` into a wider ambient space at `offset`.
RatMatrix embed_rows(const Subspace& s, int offset, int total) {
    RatMatrix rows(s.dim(), total);
    for (int r = 0; r < s.dim(); ++r) {
        for (int c = 0; c < s.ambient_dim(); ++c) {
            rows.at(r, offset + c) = s.basis().at(r, c);
        }
    }
    return rows;
}

RatMatrix free_block(int offset, int width, int total) {
    RatMatrix rows(width, total);
    for (int r = 0; r < width; ++r) {
        rows.at(r, offset + r) = 1;
    }
    return rows;
}

}  // namespace

LinearRelation LinearRelation::from_graph(InnerProductSpace from, InnerProductSpace to,
                                          Subspace graph) {
    if (graph.ambient_dim() != from.dim() + to.dim()) {
        throw Error("relation graph must live in the product of its spaces");
    }
    LinearRelation t;
    t.from_ = std::move(from);
    t.to_ = std::move(to);
    t.graph_ = std::move(graph);
    return t;
}

LinearRelation LinearRelation::from_matrix(const RatMatrix& a, const Subspace& domain,
                                           InnerProductSpace from, InnerProductSpace to) {
    if (a.cols() != from.dim() || a.rows() != to.dim()) {
        throw Error("relation matrix shape does not match the given spaces");
    }
    if (domain.ambient_dim() != from.dim()) {
        throw Error("relation domain does not live in the from-space");
    }
    const int total = from.dim() + to.dim();
    RatMatrix rows(domain.dim(), total);
    for (int r = 0; r < domain.dim(); ++r) {
        const std::vector<Rational> u = domain.basis().row(r);
        const std::vector<Rational> v = a.apply(u);
        for (int c = 0; c < from.dim(); ++c) {
            rows.at(r, c) = u[c];
        }
        for (int c = 0; c < to.dim(); ++c) {
            rows.at(r, from.dim() + c) = v[c];
        }
    }
    return from_graph(std::move(from), std::move(to), Subspace::from_rows(rows, total));
}

LinearRelation LinearRelation::from_matrix(const RatMatrix& a, InnerProductSpace from,
                                           InnerProductSpace to) {
    const Subspace everything = Subspace::full(from.dim());
    return from_matrix(a, everything, std::move(from), std::move(to));
}

LinearRelation LinearRelation::zero_map(InnerProductSpace from, InnerProductSpace to) {
    return from_matrix(RatMatrix::zero(to.dim(), from.dim()), std::move(from), std::move(to));
}

LinearRelation LinearRelation::zero_relation(InnerProductSpace from, InnerProductSpace to) {
    const int total = from.dim() + to.dim();
    return from_graph(std::move(from), std::move(to), Subspace::zero(total));
}

LinearRelation LinearRelation::full_relation(InnerProductSpace from, InnerProductSpace to) {
    const int total = from.dim() + to.dim();
    return from_graph(std::move(from), std::move(to), Subspace::full(total));
}

LinearRelation LinearRelation::identity(const InnerProductSpace& space) {
    return from_matrix(RatMatrix::identity(space.dim()), space, space);
}

bool LinearRelation::contained_in(const LinearRelation& rhs) const {
    if (!(from_ == rhs.from_) || !(to_ == rhs.to_)) {
        throw Error("graph containment requires matching spaces");
    }
    return rhs.graph_.contains(graph_);
}

bool LinearRelation::relates(const std::vector<Rational>& u,
                             const std::vector<Rational>& v) const {
    std::vector<Rational> pair = u;
    pair.insert(pair.end(), v.begin(), v.end());
    return graph_.contains(pair);
}

RelationParts parts(const LinearRelation& t) {
    RelationParts p;
    p.dom = domain_of(t);
    p.ran = range_of(t);
    p.mul = mul_of(t);
    p.ker_inclusive = kernel_inclusive(t);
    p.ker_strict = p.mul.dim() == 0 ? p.ker_inclusive : Subspace::zero(t.from().dim());
    return p;
}

Subspace domain_of(const LinearRelation& t) {
    return project_rows(t.graph(), 0, t.from().dim());
}

Subspace range_of(const LinearRelation& t) {
    return project_rows(t.graph(), t.from().dim(), t.to().dim());
}

Subspace mul_of(const LinearRelation& t) {
    // Pairs (0, w): intersect the graph with {0} (+) to, then read off w.
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    const Subspace zero_cross_to =
        Subspace::from_rows(free_block(nf, nt, nf + nt), nf + nt);
    return project_rows(subspace_meet(t.graph(), zero_cross_to), nf, nt);
}

Subspace kernel_inclusive(const LinearRelation& t) {
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    const Subspace from_cross_zero =
        Subspace::from_rows(free_block(0, nf, nf + nt), nf + nt);
    return project_rows(subspace_meet(t.graph(), from_cross_zero), 0, nf);
}

Subspace kernel_strict(const LinearRelation& t) {
    return mul_of(t).dim() == 0 ? kernel_inclusive(t) : Subspace::zero(t.from().dim());
}

LinearRelation adjoint(const LinearRelation& t) {
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    // Rotate (a, b) -> (b, -a) inside to (+) from; the adjoint graph is the
    // product-Gram orthocomplement of the rotated graph.
    RatMatrix rotated(t.graph().dim(), nt + nf);
    for (int r = 0; r < t.graph().dim(); ++r) {
        for (int c = 0; c < nt; ++c) {
            rotated.at(r, c) = t.graph().basis().at(r, nf + c);
        }
        for (int c = 0; c < nf; ++c) {
            rotated.at(r, nt + c) = -t.graph().basis().at(r, c);
        }
    }
    const InnerProductSpace product(nt + nf, product_gram(t.to(), t.from()));
    const Subspace graph =
        orthocomplement(Subspace::from_rows(rotated, nt + nf), product);
    return LinearRelation::from_graph(t.to(), t.from(), graph);
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& t) {
    if (!(t.to() == s.from())) {
        throw Error("composition: inner spaces do not match");
    }
    const int na = t.from().dim();
    const int nb = t.to().dim();
    const int nc = s.to().dim();
    const int total = na + nb + nc;
    // {(a, b, c) : (a, b) in t}  intersect  {(a, b, c) : (b, c) in s},
    // then forget the middle coordinate.
    const Subspace lift_t = Subspace::from_rows(
        embed_rows(t.graph(), 0, total).stacked(free_block(na + nb, nc, total)), total);
    const Subspace lift_s = Subspace::from_rows(
        embed_rows(s.graph(), na, total).stacked(free_block(0, na, total)), total);
    const Subspace joint = subspace_meet(lift_t, lift_s);
    RatMatrix rows(joint.dim(), na + nc);
    for (int r = 0; r < joint.dim(); ++r) {
        for (int c = 0; c < na; ++c) {
            rows.at(r, c) = joint.basis().at(r, c);
        }
        for (int c = 0; c < nc; ++c) {
            rows.at(r, na + c) = joint.basis().at(r, na + nb + c);
        }
    }
    return LinearRelation::from_graph(t.from(), s.to(),
                                      Subspace::from_rows(rows, na + nc));
}

LinearRelation add(const LinearRelation& s, const LinearRelation& t) {
    if (!(s.from() == t.from()) || !(s.to() == t.to())) {
        throw Error("relation sum: spaces do not match");
    }
    const int na = s.from().dim();
    const int nb = s.to().dim();
    const int total = na + nb + nb;
    // {(u, v, w) : (u, v) in s, (u, w) in t}, then map (u, v, w) -> (u, v + w).
    const Subspace lift_s = Subspace::from_rows(
        embed_rows(s.graph(), 0, total).stacked(free_block(na + nb, nb, total)), total);
    RatMatrix t_rows(t.graph().dim(), total);
    for (int r = 0; r < t.graph().dim(); ++r) {
        for (int c = 0; c < na; ++c) {
            t_rows.at(r, c) = t.graph().basis().at(r, c);
        }
        for (int c = 0; c < nb; ++c) {
            t_rows.at(r, na + nb + c) = t.graph().basis().at(r, na + c);
        }
    }
    const Subspace lift_t =
        Subspace::from_rows(t_rows.stacked(free_block(na, nb, total)), total);
    const Subspace joint = subspace_meet(lift_s, lift_t);
    RatMatrix rows(joint.dim(), na + nb);
    for (int r = 0; r < joint.dim(); ++r) {
        for (int c = 0; c < na; ++c) {
            rows.at(r, c) = joint.basis().at(r, c);
        }
        for (int c = 0; c < nb; ++c) {
            rows.at(r, na + c) =
                joint.basis().at(r, na + c) + joint.basis().at(r, na + nb + c);
        }
    }
    return LinearRelation::from_graph(s.from(), s.to(),
                                      Subspace::from_rows(rows, na + nb));
}

LinearRelation restrict_domain(const LinearRelation& t, const Subspace& s) {
    if (s.ambient_dim() != t.from().dim()) {
        throw Error("domain restriction does not live in the from-space");
    }
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    const Subspace s_cross_to = Subspace::from_rows(
        embed_rows(s, 0, nf + nt).stacked(free_block(nf, nt, nf + nt)), nf + nt);
    return LinearRelation::from_graph(t.from(), t.to(),
                                      subspace_meet(t.graph(), s_cross_to));
}

bool is_single_valued(const LinearRelation& t) { return mul_of(t).dim() == 0; }

bool is_everywhere_defined(const LinearRelation& t) {
    return domain_of(t).dim() == t.from().dim();
}

RatMatrix to_matrix(const LinearRelation& t) {
    if (!is_single_valued(t) || !is_everywhere_defined(t)) {
        throw Error("only everywhere-defined single-valued relations have a matrix");
    }
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    RatMatrix m(nt, nf);
    // Solve for the image of each standard basis vector from the graph basis.
    const RatMatrix graph_cols = t.graph().basis().transpose();  // (nf+nt) x k
    for (int j = 0; j < nf; ++j) {
        std::vector<Rational> target(nf, Rational(0));
        target[j] = 1;
        const RatMatrix from_part = graph_cols.block(0, 0, nf, t.graph().dim());
        const auto coeffs = solve(from_part, target);
        if (!coeffs) {
            throw Error("relation claims to be everywhere defined but is not");
        }
        for (int i = 0; i < nt; ++i) {
            Rational value(0);
            for (int k = 0; k < t.graph().dim(); ++k) {
                value += t.graph().basis().at(k, nf + i) * (*coeffs)[k];
            }
            m.at(i, j) = value;
        }
    }
    return m;
}

std::optional<std::vector<Rational>> image_of(const LinearRelation& t,
                                              const std::vector<Rational>& u) {
    if (static_cast<int>(u.size()) != t.from().dim()) {
        throw Error("vector length does not match the relation's from-space");
    }
    const int nf = t.from().dim();
    const int nt = t.to().dim();
    // Coefficients x with (graph basis)^T x = (u, *): solve on the from-block.
    const RatMatrix graph_cols = t.graph().basis().transpose();
    const RatMatrix from_part = graph_cols.block(0, 0, nf, t.graph().dim());
    const auto coeffs = solve(from_part, u);
    if (!coeffs) {
        return std::nullopt;
    }
    std::vector<Rational> image(static_cast<std::size_t>(nt), Rational(0));
    for (int i = 0; i < nt; ++i) {
        for (int k = 0; k < t.graph().dim(); ++k) {
            image[static_cast<std::size_t>(i)] +=
                t.graph().basis().at(k, nf + i) * (*coeffs)[static_cast<std::size_t>(k)];
        }
    }
    return image;
}

AdjointCompositionCheck adjoint_composition_check(const LinearRelation& s,
                                                  const LinearRelation& t) {
    const LinearRelation lhs = compose(adjoint(t), adjoint(s));
    const LinearRelation rhs = adjoint(compose(s, t));
    AdjointCompositionCheck out;
    out.inclusion_holds = lhs.contained_in(rhs);
    out.equality_holds = out.inclusion_holds && rhs.contained_in(lhs);
    return out;
}

}  // namespace hodgepair
