#include "hodgepair/matrix.hpp"

namespace hodgepair {

namespace {

void check(bool condition, const char* message) {
    if (!condition) {
        throw Error(message);
    }
}

}  // namespace

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        check(static_cast<int>(row.size()) == cols_, "ragged initializer for matrix");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

RatMatrix RatMatrix::zero(int rows, int cols) { return RatMatrix(rows, cols); }

RatMatrix RatMatrix::from_int(const std::vector<std::vector<long long>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows(); ++r) {
        check(static_cast<int>(rows[r].size()) == m.cols(), "ragged integer matrix");
        for (int c = 0; c < m.cols(); ++c) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

Rational& RatMatrix::at(int r, int c) {
    check(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

const Rational& RatMatrix::at(int r, int c) const {
    check(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    check(cols_ == rhs.rows_, "matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (int c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sum shape mismatch");
    RatMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += rhs.data_[i];
    }
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
    check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference shape mismatch");
    RatMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] -= rhs.data_[i];
    }
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
    RatMatrix out = *this;
    for (auto& x : out.data_) {
        x *= factor;
    }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    check(static_cast<int>(v.size()) == cols_, "matrix-vector shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out[r] += at(r, c) * v[c];
        }
    }
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (int r = 0; r < rows_; ++r) {
        for (int c = r + 1; c < cols_; ++c) {
            if (at(r, c) != at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

RatMatrix RatMatrix::stacked(const RatMatrix& bottom) const {
    if (rows_ == 0) {
        return bottom;
    }
    if (bottom.rows_ == 0) {
        return *this;
    }
    check(cols_ == bottom.cols_, "stacked rows need equal column counts");
    RatMatrix out(rows_ + bottom.rows_, cols_);
    out.data_ = data_;
    out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
    return out;
}

RatMatrix RatMatrix::augmented(const RatMatrix& right) const {
    check(rows_ == right.rows_, "augmented columns need equal row counts");
    RatMatrix out(rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out.at(r, c) = at(r, c);
        }
        for (int c = 0; c < right.cols_; ++c) {
            out.at(r, cols_ + c) = right.at(r, c);
        }
    }
    return out;
}

RatMatrix RatMatrix::block(int r0, int c0, int rows, int cols) const {
    check(r0 >= 0 && c0 >= 0 && rows >= 0 && cols >= 0 && r0 + rows <= rows_ &&
              c0 + cols <= cols_,
          "matrix block out of range");
    RatMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            out.at(r, c) = at(r0 + r, c0 + c);
        }
    }
    return out;
}

std::vector<Rational> RatMatrix::row(int r) const {
    check(r >= 0 && r < rows_, "matrix row out of range");
    return std::vector<Rational>(data_.begin() + static_cast<size_t>(r) * cols_,
                                 data_.begin() + static_cast<size_t>(r + 1) * cols_);
}

RatMatrix RatMatrix::inverse() const {
    check(rows_ == cols_, "only square matrices can be inverted");
    RatMatrix work = augmented(identity(rows_));
    int pivot_row = 0;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int found = -1;
        for (int r = pivot_row; r < rows_; ++r) {
            if (work.at(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found < 0) {
            throw Error("matrix is singular");
        }
        if (found != pivot_row) {
            for (int c = 0; c < work.cols(); ++c) {
                std::swap(work.at(found, c), work.at(pivot_row, c));
            }
        }
        const Rational inv = Rational(1) / work.at(pivot_row, col);
        for (int c = 0; c < work.cols(); ++c) {
            work.at(pivot_row, c) *= inv;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == pivot_row || work.at(r, col) == 0) {
                continue;
            }
            const Rational factor = work.at(r, col);
            for (int c = 0; c < work.cols(); ++c) {
                work.at(r, c) -= factor * work.at(pivot_row, c);
            }
        }
        ++pivot_row;
    }
    if (pivot_row < rows_) {
        throw Error("matrix is singular");
    }
    return work.block(0, cols_, rows_, cols_);
}

}  // namespace hodgepair
