#pragma once

#include "hodgepair/subspace.hpp"

namespace hodgepair {

/// Linear relation between inner-product spaces: a subspace of from (+) to,
/// stored canonically. Relations subsume partially defined and multivalued
/// operators, which is what lets adjoints of non-densely-defined maps exist
/// as first-class objects instead of special cases.
class LinearRelation {
public:
    LinearRelation() = default;

    /// Wrap an arbitrary graph subspace (ambient dim must be from.dim + to.dim).
    static LinearRelation from_graph(InnerProductSpace from, InnerProductSpace to,
                                     Subspace graph);

    /// The map u -> a u restricted to `domain`: graph {(u, a u) : u in domain}.
    static LinearRelation from_matrix(const RatMatrix& a, const Subspace& domain,
                                      InnerProductSpace from, InnerProductSpace to);

    /// Everywhere-defined matrix map.
    static LinearRelation from_matrix(const RatMatrix& a, InnerProductSpace from,
                                      InnerProductSpace to);

    /// Everywhere-defined zero map (graph = from (+) {0}).
    static LinearRelation zero_map(InnerProductSpace from, InnerProductSpace to);

    /// The trivial relation with graph {0} (defined nowhere but at 0).
    static LinearRelation zero_relation(InnerProductSpace from, InnerProductSpace to);

    /// The full relation (every vector related to every vector).
    static LinearRelation full_relation(InnerProductSpace from, InnerProductSpace to);

    static LinearRelation identity(const InnerProductSpace& space);

    const InnerProductSpace& from() const { return from_; }
    const InnerProductSpace& to() const { return to_; }
    const Subspace& graph() const { return graph_; }

    bool operator==(const LinearRelation& rhs) const {
        return from_ == rhs.from_ && to_ == rhs.to_ && graph_ == rhs.graph_;
    }

    /// Graph containment: this relation's graph inside rhs's graph
    /// (spaces must agree).
    bool contained_in(const LinearRelation& rhs) const;

    bool relates(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

private:
    InnerProductSpace from_;
    InnerProductSpace to_;
    Subspace graph_;  // subspace of Q^(from.dim + to.dim)
};

/// The standard anatomy of a relation. ker_strict rounds the pointwise notion
/// "every image of u is zero" to a subspace: it equals ker_inclusive when the
/// relation is single-valued (mul = {0}) and collapses to {0} otherwise.
struct RelationParts {
    Subspace dom;
    Subspace ran;
    Subspace mul;            // images of 0
    Subspace ker_inclusive;  // {u : (u, 0) in graph}
    Subspace ker_strict;
};

RelationParts parts(const LinearRelation& t);

Subspace domain_of(const LinearRelation& t);
Subspace range_of(const LinearRelation& t);
Subspace mul_of(const LinearRelation& t);
Subspace kernel_inclusive(const LinearRelation& t);
Subspace kernel_strict(const LinearRelation& t);

/// Adjoint: graph(t*) = {(v, w) : <b, v>_to = <a, w>_from for all (a, b) in t},
/// computed as the product-Gram orthocomplement of the rotated graph
/// {(b, -a)}. Always exists; non-dense domains just make it multivalued.
LinearRelation adjoint(const LinearRelation& t);

/// Composition s o t (apply t first): {(u, w) : exists v, (u,v) in t, (v,w) in s}.
LinearRelation compose(const LinearRelation& s, const LinearRelation& t);

/// Pointwise sum on the common domain: {(u, v + w) : (u,v) in s, (u,w) in t}.
LinearRelation add(const LinearRelation& s, const LinearRelation& t);

/// Restriction of the domain: graph(t) intersected with s (+) to.
LinearRelation restrict_domain(const LinearRelation& t, const Subspace& s);

/// True when mul(t) = {0}.
bool is_single_valued(const LinearRelation& t);

/// True when dom(t) is the whole from-space.
bool is_everywhere_defined(const LinearRelation& t);

/// Recover the matrix of an everywhere-defined single-valued relation.
/// Throws Error otherwise.
RatMatrix to_matrix(const LinearRelation& t);

/// One image of u under t (nullopt when u is outside dom t). Multivalued
/// relations return an arbitrary but deterministic representative.
std::optional<std::vector<Rational>> image_of(const LinearRelation& t,
                                              const std::vector<Rational>& u);

/// Result of checking the adjoint-of-composition inclusion
/// graph(t* o s*) inside graph((s o t)*), recording whether it is equality.
struct AdjointCompositionCheck {
    bool inclusion_holds = false;
    bool equality_holds = false;
};

AdjointCompositionCheck adjoint_composition_check(const LinearRelation& s,
                                                  const LinearRelation& t);

}  // namespace hodgepair
