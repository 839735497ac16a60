#include "hodgepair/subspace.hpp"

namespace hodgepair {

RrefResult rref(const RatMatrix& m) {
    RrefResult result;
    RatMatrix work = m;
    const int rows = work.rows();
    const int cols = work.cols();
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int found = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (work.at(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found < 0) {
            continue;
        }
        if (found != pivot_row) {
            for (int c = 0; c < cols; ++c) {
                std::swap(work.at(found, c), work.at(pivot_row, c));
            }
        }
        const Rational inv = Rational(1) / work.at(pivot_row, col);
        for (int c = col; c < cols; ++c) {
            work.at(pivot_row, c) *= inv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || work.at(r, col) == 0) {
                continue;
            }
            const Rational factor = work.at(r, col);
            for (int c = col; c < cols; ++c) {
                work.at(r, c) -= factor * work.at(pivot_row, c);
            }
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    result.rank = pivot_row;
    result.reduced = work;
    return result;
}

RatMatrix nullspace(const RatMatrix& m) {
    const RrefResult r = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_cols.push_back(c);
        }
    }
    RatMatrix basis(static_cast<int>(free_cols.size()), cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.at(static_cast<int>(k), fc) = 1;
        for (int row = 0; row < r.rank; ++row) {
            // Pivot variable of this row = -(coefficient of the free column).
            basis.at(static_cast<int>(k), r.pivots[row]) = -r.reduced.at(row, fc);
        }
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows()) {
        throw Error("solve: right-hand side length mismatch");
    }
    RatMatrix rhs(m.rows(), 1);
    for (int r = 0; r < m.rows(); ++r) {
        rhs.at(r, 0) = b[r];
    }
    const RrefResult red = rref(m.augmented(rhs));
    std::vector<Rational> x(m.cols(), Rational(0));
    for (int row = 0; row < red.rank; ++row) {
        const int p = red.pivots[row];
        if (p == m.cols()) {
            return std::nullopt;  // pivot in the augmented column: inconsistent
        }
        x[p] = red.reduced.at(row, m.cols());
    }
    return x;
}

InnerProductSpace::InnerProductSpace(int dim, RatMatrix gram) : dim_(dim), gram_(std::move(gram)) {
    if (dim_ < 0) {
        throw Error("inner-product space dimension must be nonnegative");
    }
    if (gram_.rows() != dim_ || gram_.cols() != dim_) {
        throw Error("Gram matrix shape does not match space dimension");
    }
    if (!gram_.is_symmetric()) {
        throw Error("Gram matrix must be symmetric");
    }
    // Sylvester's criterion via symmetric elimination: positive definiteness
    // is equivalent to every pivot of the unpivoted LDL^T sweep being > 0.
    RatMatrix work = gram_;
    for (int k = 0; k < dim_; ++k) {
        const Rational pivot = work.at(k, k);
        if (pivot <= 0) {
            throw Error("Gram matrix is not positive definite");
        }
        for (int r = k + 1; r < dim_; ++r) {
            if (work.at(r, k) == 0) {
                continue;
            }
            const Rational factor = work.at(r, k) / pivot;
            for (int c = k; c < dim_; ++c) {
                work.at(r, c) -= factor * work.at(k, c);
            }
        }
    }
}

InnerProductSpace InnerProductSpace::euclidean(int dim) {
    return InnerProductSpace(dim, RatMatrix::identity(dim));
}

Rational InnerProductSpace::inner(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_) {
        throw Error("inner product operand length mismatch");
    }
    Rational total(0);
    const std::vector<Rational> gb = gram_.apply(b);
    for (int i = 0; i < dim_; ++i) {
        total += a[i] * gb[i];
    }
    return total;
}

Subspace Subspace::from_rows(const RatMatrix& rows, int ambient_dim) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim) {
        throw Error("subspace generators do not match the ambient dimension");
    }
    Subspace s;
    s.ambient_ = ambient_dim;
    const RrefResult r = rref(rows.rows() == 0 ? RatMatrix(0, ambient_dim) : rows);
    s.basis_ = r.reduced.block(0, 0, r.rank, ambient_dim);
    return s;
}

Subspace Subspace::zero(int ambient_dim) {
    return from_rows(RatMatrix(0, ambient_dim), ambient_dim);
}

Subspace Subspace::full(int ambient_dim) {
    return from_rows(RatMatrix::identity(ambient_dim), ambient_dim);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_) {
        throw Error("membership test: vector length does not match ambient dimension");
    }
    // Reduce v against the RREF basis; containment <=> zero residual.
    std::vector<Rational> residual = v;
    for (int row = 0; row < basis_.rows(); ++row) {
        int pivot = -1;
        for (int c = 0; c < ambient_; ++c) {
            if (basis_.at(row, c) != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0 || residual[pivot] == 0) {
            continue;
        }
        const Rational factor = residual[pivot];
        for (int c = pivot; c < ambient_; ++c) {
            residual[c] -= factor * basis_.at(row, c);
        }
    }
    for (const auto& x : residual) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) {
        throw Error("membership test: ambient dimensions differ");
    }
    for (int r = 0; r < other.basis_.rows(); ++r) {
        if (!contains(other.basis_.row(r))) {
            return false;
        }
    }
    return true;
}

namespace {

/// Annihilator of a rowspace under the standard dot pairing: {x : B x = 0}.
/// Applying it twice recovers the original subspace, which turns intersection
/// into a pair of sums.
Subspace annihilator(const Subspace& s) {
    return Subspace::from_rows(nullspace(s.basis()), s.ambient_dim());
}

}  // namespace

SumIntersect subspace_sum_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error("subspace sum/intersection: ambient dimensions differ");
    }
    SumIntersect out;
    out.sum = Subspace::from_rows(a.basis().stacked(b.basis()), a.ambient_dim());
    const Subspace ann_sum = Subspace::from_rows(
        annihilator(a).basis().stacked(annihilator(b).basis()), a.ambient_dim());
    out.meet = annihilator(ann_sum);
    return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error("subspace sum: ambient dimensions differ");
    }
    return Subspace::from_rows(a.basis().stacked(b.basis()), a.ambient_dim());
}

Subspace subspace_meet(const Subspace& a, const Subspace& b) {
    return subspace_sum_intersect(a, b).meet;
}

Subspace orthocomplement(const Subspace& s, const InnerProductSpace& space) {
    if (s.ambient_dim() != space.dim()) {
        throw Error("orthocomplement: space dimension does not match ambient dimension");
    }
    // x is Gram-orthogonal to every basis row b  <=>  (B G) x = 0.
    return Subspace::from_rows(nullspace(s.basis() * space.gram()), space.dim());
}

RatMatrix adjoint_matrix(const RatMatrix& a, const InnerProductSpace& from,
                         const InnerProductSpace& to) {
    if (a.cols() != from.dim() || a.rows() != to.dim()) {
        throw Error("adjoint: matrix shape does not match the given spaces");
    }
    return from.gram().inverse() * a.transpose() * to.gram();
}

}  // namespace hodgepair
