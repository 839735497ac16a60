#include "hodgepair/crosscheck.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "hodgepair/error.hpp"

namespace hodgepair {

namespace {

// A floating-point copy of the subspace/relation pipeline. Everything here
// is dimension bookkeeping over double matrices: row spans survive a
// thresholded Gauss-Jordan pass, and all set operations reduce to spans,
// nullspaces, and coordinate projections. Column counts are carried
// explicitly because empty matrices appear throughout (zero spaces pad the
// ends of every complex).

using Mat = std::vector<std::vector<double>>;

Mat make_mat(std::size_t rows, std::size_t cols) {
    return Mat(rows, std::vector<double>(cols, 0.0));
}

double max_abs(const Mat& rows) {
    double best = 0;
    for (const auto& row : rows) {
        for (double v : row) best = std::max(best, std::fabs(v));
    }
    return best;
}

struct Echelon {
    Mat rows;                        // normalized surviving rows
    std::vector<std::size_t> pivots; // pivot column of each surviving row
};

/// Gauss-Jordan with partial pivoting. Pivot candidates of magnitude at most
/// tolerance * (largest entry of the input) are treated as zero, so the
/// returned row count is the thresholded rank.
Echelon reduce(Mat rows, std::size_t cols, double tolerance) {
    Echelon out;
    const double threshold = tolerance * max_abs(rows);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (std::fabs(rows[r][col]) > std::fabs(rows[pivot][col])) pivot = r;
        }
        if (std::fabs(rows[pivot][col]) <= threshold) continue;
        std::swap(rows[rank], rows[pivot]);
        const double p = rows[rank][col];
        for (std::size_t c = 0; c < cols; ++c) rows[rank][c] /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const double f = rows[r][col];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                rows[r][c] -= f * rows[rank][c];
            }
        }
        out.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.rows = std::move(rows);
    return out;
}

struct FSub {
    int ambient = 0;
    Mat basis;  // reduced rows
    int dim() const { return static_cast<int>(basis.size()); }
};

FSub span_of(Mat rows, int ambient, double tol) {
    FSub out;
    out.ambient = ambient;
    out.basis = reduce(std::move(rows), static_cast<std::size_t>(ambient), tol).rows;
    return out;
}

FSub zero_sub(int ambient) { return FSub{ambient, {}}; }

/// {x : m x = 0}, with m given as rows over `cols` columns.
FSub nullspace_of(Mat m, int cols, double tol) {
    const Echelon e = reduce(std::move(m), static_cast<std::size_t>(cols), tol);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    FSub out;
    out.ambient = cols;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<double> v(static_cast<std::size_t>(cols), 0.0);
        v[static_cast<std::size_t>(free)] = 1.0;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            v[e.pivots[r]] = -e.rows[r][static_cast<std::size_t>(free)];
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

Mat mat_mul(const Mat& a, std::size_t a_cols, const Mat& b, std::size_t b_cols) {
    Mat out = make_mat(a.size(), b_cols);
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t k = 0; k < a_cols; ++k) {
            const double v = a[r][k];
            if (v == 0) continue;
            for (std::size_t c = 0; c < b_cols; ++c) {
                out[r][c] += v * b[k][c];
            }
        }
    }
    return out;
}

/// Orthogonal complement for the plain dot product: the nullspace of the
/// basis matrix. Independent of any Gram, so usable for set intersections.
FSub euclid_orth(const FSub& s, double tol) {
    return nullspace_of(s.basis, s.ambient, tol);
}

FSub meet(const FSub& a, const FSub& b, double tol) {
    const FSub oa = euclid_orth(a, tol);
    const FSub ob = euclid_orth(b, tol);
    Mat stacked = oa.basis;
    stacked.insert(stacked.end(), ob.basis.begin(), ob.basis.end());
    return euclid_orth(span_of(std::move(stacked), a.ambient, tol), tol);
}

/// Complement with respect to a Gram matrix: {x : B G x = 0}.
FSub orthocomplement(const FSub& s, const Mat& gram, double tol) {
    return nullspace_of(
        mat_mul(s.basis, static_cast<std::size_t>(s.ambient), gram,
                static_cast<std::size_t>(s.ambient)),
        s.ambient, tol);
}

FSub project(const FSub& s, int offset, int len, double tol) {
    Mat rows = make_mat(s.basis.size(), static_cast<std::size_t>(len));
    for (std::size_t r = 0; r < s.basis.size(); ++r) {
        for (int c = 0; c < len; ++c) {
            rows[r][static_cast<std::size_t>(c)] =
                s.basis[r][static_cast<std::size_t>(offset + c)];
        }
    }
    return span_of(std::move(rows), len, tol);
}

Mat embed_rows(const Mat& rows, int offset, int total) {
    Mat out = make_mat(rows.size(), static_cast<std::size_t>(total));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            out[r][static_cast<std::size_t>(offset) + c] = rows[r][c];
        }
    }
    return out;
}

/// Rows e_offset .. e_{offset+len-1} of the identity on `total` coordinates.
Mat free_block(int offset, int len, int total) {
    Mat out = make_mat(static_cast<std::size_t>(len), static_cast<std::size_t>(total));
    for (int i = 0; i < len; ++i) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(offset + i)] = 1.0;
    }
    return out;
}

struct FSpace {
    int n = 0;
    Mat gram;
};

struct FRel {
    FSpace from;
    FSpace to;
    FSub graph;  // reduced rows in from (+) to coordinates
};

FRel zero_map(const FSpace& from, const FSpace& to, double tol) {
    FRel out{from, to, {}};
    out.graph = span_of(free_block(0, from.n, from.n + to.n), from.n + to.n, tol);
    return out;
}

FSub domain_of(const FRel& t, double tol) {
    return project(t.graph, 0, t.from.n, tol);
}

FSub range_of(const FRel& t, double tol) {
    return project(t.graph, t.from.n, t.to.n, tol);
}

FSub mul_of(const FRel& t, double tol) {
    const FSub zero_cross_to =
        span_of(free_block(t.from.n, t.to.n, t.from.n + t.to.n),
                t.from.n + t.to.n, tol);
    return project(meet(t.graph, zero_cross_to, tol), t.from.n, t.to.n, tol);
}

FSub kernel_inclusive(const FRel& t, double tol) {
    const FSub from_cross_zero = span_of(
        free_block(0, t.from.n, t.from.n + t.to.n), t.from.n + t.to.n, tol);
    return project(meet(t.graph, from_cross_zero, tol), 0, t.from.n, tol);
}

FSub kernel(const FRel& t, KernelMode mode, double tol) {
    if (mode == KernelMode::strict && mul_of(t, tol).dim() != 0) {
        return zero_sub(t.from.n);
    }
    return kernel_inclusive(t, tol);
}

Mat product_gram(const FSpace& a, const FSpace& b) {
    Mat out = make_mat(static_cast<std::size_t>(a.n + b.n),
                       static_cast<std::size_t>(a.n + b.n));
    for (int r = 0; r < a.n; ++r) {
        for (int c = 0; c < a.n; ++c) {
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                a.gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    for (int r = 0; r < b.n; ++r) {
        for (int c = 0; c < b.n; ++c) {
            out[static_cast<std::size_t>(a.n + r)][static_cast<std::size_t>(a.n + c)] =
                b.gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }
    return out;
}

/// Adjoint: rotate graph pairs (a, b) to (b, -a) inside to (+) from, then
/// take the product-Gram orthogonal complement.
FRel adjoint(const FRel& t, double tol) {
    const int nf = t.from.n;
    const int nt = t.to.n;
    Mat rotated = make_mat(t.graph.basis.size(), static_cast<std::size_t>(nt + nf));
    for (std::size_t r = 0; r < t.graph.basis.size(); ++r) {
        for (int c = 0; c < nt; ++c) {
            rotated[r][static_cast<std::size_t>(c)] =
                t.graph.basis[r][static_cast<std::size_t>(nf + c)];
        }
        for (int c = 0; c < nf; ++c) {
            rotated[r][static_cast<std::size_t>(nt + c)] =
                -t.graph.basis[r][static_cast<std::size_t>(c)];
        }
    }
    FRel out{t.to, t.from, {}};
    out.graph = orthocomplement(span_of(std::move(rotated), nt + nf, tol),
                                product_gram(t.to, t.from), tol);
    return out;
}

/// compose(s, t): t first, then s — pairs (a, c) with (a, b) in t, (b, c) in s.
FRel compose(const FRel& s, const FRel& t, double tol) {
    const int na = t.from.n;
    const int nb = t.to.n;
    const int nc = s.to.n;
    const int total = na + nb + nc;
    Mat lift_t = embed_rows(t.graph.basis, 0, total);
    {
        Mat tail = free_block(na + nb, nc, total);
        lift_t.insert(lift_t.end(), tail.begin(), tail.end());
    }
    Mat lift_s = embed_rows(s.graph.basis, na, total);
    {
        Mat head = free_block(0, na, total);
        lift_s.insert(lift_s.end(), head.begin(), head.end());
    }
    const FSub joint = meet(span_of(std::move(lift_t), total, tol),
                            span_of(std::move(lift_s), total, tol), tol);
    Mat rows = make_mat(joint.basis.size(), static_cast<std::size_t>(na + nc));
    for (std::size_t r = 0; r < joint.basis.size(); ++r) {
        for (int c = 0; c < na; ++c) {
            rows[r][static_cast<std::size_t>(c)] =
                joint.basis[r][static_cast<std::size_t>(c)];
        }
        for (int c = 0; c < nc; ++c) {
            rows[r][static_cast<std::size_t>(na + c)] =
                joint.basis[r][static_cast<std::size_t>(na + nb + c)];
        }
    }
    FRel out{t.from, s.to, {}};
    out.graph = span_of(std::move(rows), na + nc, tol);
    return out;
}

/// add(s, t): pairs (u, v + w) with (u, v) in s and (u, w) in t.
FRel add(const FRel& s, const FRel& t, double tol) {
    const int na = s.from.n;
    const int nb = s.to.n;
    const int total = na + nb + nb;
    Mat lift_s = embed_rows(s.graph.basis, 0, total);
    {
        Mat tail = free_block(na + nb, nb, total);
        lift_s.insert(lift_s.end(), tail.begin(), tail.end());
    }
    Mat t_rows = make_mat(t.graph.basis.size(), static_cast<std::size_t>(total));
    for (std::size_t r = 0; r < t.graph.basis.size(); ++r) {
        for (int c = 0; c < na; ++c) {
            t_rows[r][static_cast<std::size_t>(c)] =
                t.graph.basis[r][static_cast<std::size_t>(c)];
        }
        for (int c = 0; c < nb; ++c) {
            t_rows[r][static_cast<std::size_t>(na + nb + c)] =
                t.graph.basis[r][static_cast<std::size_t>(na + c)];
        }
    }
    {
        Mat mid = free_block(na, nb, total);
        t_rows.insert(t_rows.end(), mid.begin(), mid.end());
    }
    const FSub joint = meet(span_of(std::move(lift_s), total, tol),
                            span_of(std::move(t_rows), total, tol), tol);
    Mat rows = make_mat(joint.basis.size(), static_cast<std::size_t>(na + nb));
    for (std::size_t r = 0; r < joint.basis.size(); ++r) {
        for (int c = 0; c < na; ++c) {
            rows[r][static_cast<std::size_t>(c)] =
                joint.basis[r][static_cast<std::size_t>(c)];
        }
        for (int c = 0; c < nb; ++c) {
            rows[r][static_cast<std::size_t>(na + c)] =
                joint.basis[r][static_cast<std::size_t>(na + c)] +
                joint.basis[r][static_cast<std::size_t>(na + nb + c)];
        }
    }
    FRel out{s.from, s.to, {}};
    out.graph = span_of(std::move(rows), na + nb, tol);
    return out;
}

FRel restrict_domain(const FRel& t, const FSub& s, double tol) {
    const int nf = t.from.n;
    const int nt = t.to.n;
    Mat rows = embed_rows(s.basis, 0, nf + nt);
    {
        Mat tail = free_block(nf, nt, nf + nt);
        rows.insert(rows.end(), tail.begin(), tail.end());
    }
    FRel out{t.from, t.to, {}};
    out.graph = meet(t.graph, span_of(std::move(rows), nf + nt, tol), tol);
    return out;
}

struct FComplex {
    std::vector<FSpace> spaces;  // degrees 0..n
    std::vector<FRel> diffs;     // degrees 0..n-1

    int n() const { return static_cast<int>(spaces.size()) - 1; }

    FSpace space(int q) const {
        if (q < 0 || q > n()) return FSpace{0, {}};
        return spaces[static_cast<std::size_t>(q)];
    }

    FRel diff(int q, double tol) const {
        if (q >= 0 && q <= n() - 1) return diffs[static_cast<std::size_t>(q)];
        return zero_map(space(q), space(q + 1), tol);
    }

    FRel delta(int q, double tol) const { return adjoint(diff(q - 1, tol), tol); }
};

Mat to_doubles(const RatMatrix& m) {
    Mat out = make_mat(static_cast<std::size_t>(m.rows()),
                       static_cast<std::size_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                to_double(m.at(r, c));
        }
    }
    return out;
}

FComplex convert(const HilbertComplex& c, double tol) {
    FComplex out;
    for (int q = 0; q <= c.length(); ++q) {
        out.spaces.push_back(FSpace{c.space(q).dim(), to_doubles(c.space(q).gram())});
    }
    for (int q = 0; q < c.length(); ++q) {
        const LinearRelation& d = c.diff(q);
        FRel rel{out.spaces[static_cast<std::size_t>(q)],
                 out.spaces[static_cast<std::size_t>(q + 1)],
                 {}};
        rel.graph = span_of(to_doubles(d.graph().basis()),
                            rel.from.n + rel.to.n, tol);
        out.diffs.push_back(std::move(rel));
    }
    return out;
}

FRel laplacian(const FComplex& c, int q, double tol) {
    const FRel down = compose(c.diff(q - 1, tol), c.delta(q, tol), tol);
    const FRel up = compose(c.delta(q + 1, tol), c.diff(q, tol), tol);
    return add(down, up, tol);
}

FRel build_p(const FComplex& big, const FComplex& small, int q, double tol) {
    const FRel delta_here = adjoint(small.diff(q - 1, tol), tol);
    const FRel delta_up = adjoint(small.diff(q, tol), tol);
    const FRel down = compose(big.diff(q - 1, tol), delta_here, tol);
    const FRel up = compose(delta_up, big.diff(q, tol), tol);
    return add(down, up, tol);
}

struct FloatDims {
    int H_M, H_m, kerDelta_M, kerDelta_m, kerP, hPrime, hDoublePrime, curlyHm,
        imageMap;
};

std::vector<FloatDims> float_dims(const FComplex& big, const FComplex& small,
                                  KernelMode mode, double tol) {
    const int n = big.n();

    std::vector<FSub> ker_p;
    for (int q = 0; q <= n; ++q) {
        ker_p.push_back(kernel(build_p(big, small, q, tol), mode, tol));
    }
    std::vector<FRel> abs_diff;
    std::vector<FRel> rel_diff;
    for (int q = 0; q <= n; ++q) {
        abs_diff.push_back(
            restrict_domain(big.diff(q, tol), ker_p[static_cast<std::size_t>(q)], tol));
        rel_diff.push_back(
            restrict_domain(small.diff(q, tol), ker_p[static_cast<std::size_t>(q)], tol));
    }

    std::vector<FloatDims> out;
    for (int q = 0; q <= n; ++q) {
        FloatDims row{};
        row.H_M = kernel_inclusive(big.diff(q, tol), tol).dim() -
                  range_of(big.diff(q - 1, tol), tol).dim();
        row.H_m = kernel_inclusive(small.diff(q, tol), tol).dim() -
                  range_of(small.diff(q - 1, tol), tol).dim();
        row.kerDelta_M = kernel(laplacian(big, q, tol), mode, tol).dim();
        row.kerDelta_m = kernel(laplacian(small, q, tol), mode, tol).dim();
        row.kerP = ker_p[static_cast<std::size_t>(q)].dim();

        const FSub kernel_abs = kernel(abs_diff[static_cast<std::size_t>(q)], mode, tol);
        const FSub incoming_abs =
            q - 1 >= 0 ? range_of(abs_diff[static_cast<std::size_t>(q - 1)], tol)
                       : zero_sub(big.space(q).n);
        row.hPrime = kernel_abs.dim() - meet(kernel_abs, incoming_abs, tol).dim();

        const FSub kernel_rel = kernel(rel_diff[static_cast<std::size_t>(q)], mode, tol);
        const FSub incoming_rel =
            q - 1 >= 0 ? range_of(rel_diff[static_cast<std::size_t>(q - 1)], tol)
                       : zero_sub(big.space(q).n);
        row.hDoublePrime = kernel_rel.dim() - meet(kernel_rel, incoming_rel, tol).dim();

        const FRel delta_m = adjoint(big.diff(q - 1, tol), tol);
        row.curlyHm = meet(kernel(small.diff(q, tol), mode, tol),
                           kernel(delta_m, mode, tol), tol)
                          .dim();

        const FSub kernel_small = kernel(small.diff(q, tol), mode, tol);
        const FSub image_in_domain =
            meet(meet(range_of(big.diff(q - 1, tol), tol),
                      domain_of(small.diff(q, tol), tol), tol),
                 kernel_small, tol);
        row.imageMap = kernel_small.dim() - image_in_domain.dim();

        out.push_back(row);
    }
    return out;
}

}  // namespace

AgreementRecord crosscheck_backend(const ComplexPair& instance, double tolerance,
                                   KernelMode mode) {
    if (!(tolerance > 0)) {
        throw Error("crosscheck tolerance must be positive");
    }
    const PairAnalysis exact = analyze(instance, mode);
    const FComplex big = convert(instance.big(), tolerance);
    const FComplex small = convert(instance.small(), tolerance);
    const std::vector<FloatDims> approx = float_dims(big, small, mode, tolerance);

    AgreementRecord record;
    record.tolerance = tolerance;
    record.degrees_checked = instance.length() + 1;
    for (int q = 0; q <= instance.length(); ++q) {
        const DegreeDims& e = exact.dims[static_cast<std::size_t>(q)];
        const FloatDims& f = approx[static_cast<std::size_t>(q)];
        const std::pair<const char*, std::pair<int, int>> fields[] = {
            {"H_M", {e.H_M, f.H_M}},
            {"H_m", {e.H_m, f.H_m}},
            {"kerDelta_M", {e.kerDelta_M, f.kerDelta_M}},
            {"kerDelta_m", {e.kerDelta_m, f.kerDelta_m}},
            {"kerP", {e.kerP, f.kerP}},
            {"hPrime", {e.hPrime, f.hPrime}},
            {"hDoublePrime", {e.hDoublePrime, f.hDoublePrime}},
            {"curlyHm", {e.curlyHm, f.curlyHm}},
            {"imageMap", {e.imageMap, f.imageMap}},
        };
        for (const auto& [name, values] : fields) {
            if (values.first != values.second) {
                record.disagreements.push_back(
                    DimensionDisagreement{q, name, values.first, values.second});
            }
        }
    }
    return record;
}

}  // namespace hodgepair
