#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hodgepair/matrix.hpp"

namespace hodgepair {

/// Reduced row echelon form: `reduced` has unit pivots with zeros above and
/// below, zero rows trimmed to the bottom; `pivots` lists the pivot column of
/// each nonzero row. RREF is unique, so it doubles as a canonical form.
struct RrefResult {
    RatMatrix reduced;
    int rank = 0;
    std::vector<int> pivots;
};

RrefResult rref(const RatMatrix& m);

/// Canonical basis (as rows) of the right null space {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);

/// One solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b);

/// Finite-dimensional inner-product space: a dimension plus a symmetric
/// positive-definite Gram matrix. Definiteness is checked eagerly (exact
/// Sylvester pivots), so downstream code may rely on it unconditionally.
class InnerProductSpace {
public:
    InnerProductSpace() = default;
    InnerProductSpace(int dim, RatMatrix gram);

    static InnerProductSpace euclidean(int dim);

    int dim() const { return dim_; }
    const RatMatrix& gram() const { return gram_; }

    Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

    bool operator==(const InnerProductSpace& rhs) const {
        return dim_ == rhs.dim_ && gram_ == rhs.gram_;
    }

private:
    int dim_ = 0;
    RatMatrix gram_;  // dim x dim
};

/// Linear subspace of Q^n, stored as the unique RREF basis (rows). Because
/// the representation is canonical, equality of subspaces is equality of the
/// stored matrices, and identical inputs always produce identical bytes.
class Subspace {
public:
    Subspace() = default;

    /// The subspace spanned by the rows of `rows` inside Q^ambient_dim.
    static Subspace from_rows(const RatMatrix& rows, int ambient_dim);
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const {
        return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
    }

private:
    int ambient_ = 0;
    RatMatrix basis_;  // dim x ambient, canonical RREF, no zero rows
};

struct SumIntersect {
    Subspace sum;
    Subspace meet;
};

/// Sum and intersection of two subspaces of the same ambient space.
/// Satisfies dim(sum) + dim(meet) = dim(a) + dim(b).
SumIntersect subspace_sum_intersect(const Subspace& a, const Subspace& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_meet(const Subspace& a, const Subspace& b);

/// Orthogonal complement of s with respect to the Gram inner product of
/// `space` (whose dimension must equal the ambient dimension of s).
Subspace orthocomplement(const Subspace& s, const InnerProductSpace& space);

/// The adjoint of the everywhere-defined map a : from -> to, characterized by
/// <a u, v>_to = <u, a* v>_from; explicitly a* = G_from^{-1} a^T G_to.
RatMatrix adjoint_matrix(const RatMatrix& a, const InnerProductSpace& from,
                         const InnerProductSpace& to);

}  // namespace hodgepair
