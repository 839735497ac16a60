#pragma once

#include <initializer_list>
#include <vector>

#include "hodgepair/rational.hpp"

namespace hodgepair {

/// Dense matrix of exact rationals, row-major. Rows and columns may be zero
/// (empty spaces and empty bases are routine in the complexes handled here).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols);
    /// Build from integer entries; convenient for hand-written fixtures.
    static RatMatrix from_int(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix scaled(const Rational& factor) const;
    bool operator==(const RatMatrix& rhs) const;

    /// Matrix-vector product (vector as std::vector, length = cols()).
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool is_symmetric() const;
    bool is_zero() const;

    /// Stack the rows of `bottom` under this matrix (column counts must match).
    RatMatrix stacked(const RatMatrix& bottom) const;
    /// Paste `right` to the right of this matrix (row counts must match).
    RatMatrix augmented(const RatMatrix& right) const;
    /// Copy of the rectangle [r0, r0+rows) x [c0, c0+cols).
    RatMatrix block(int r0, int c0, int rows, int cols) const;
    std::vector<Rational> row(int r) const;

    /// Gauss-Jordan inverse. Throws Error on a singular or non-square matrix.
    RatMatrix inverse() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace hodgepair
