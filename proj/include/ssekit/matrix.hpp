#pragma once

#include <initializer_list>
#include <vector>

#include "ssekit/rat.hpp"

namespace ssekit {

using RatVector = std::vector<Rat>;

// Dense row-major matrix of exact rationals. At least 1x1; equality is exact
// and entrywise. Multiplication skips zero entries of whichever operand makes
// the triple loop cheaper, which matters for the sparse 0/1 amalgamation
// matrices that show up in splitting chains.
class RatMatrix {
public:
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
        if (rows == 0 || cols == 0)
            throw dimension_error("RatMatrix: dimensions must be positive");
        data_.resize(rows * cols);
    }

    RatMatrix(std::initializer_list<std::initializer_list<Rat>> init);

    static RatMatrix identity(size_t n);
    static RatMatrix constant(size_t rows, size_t cols, const Rat& value);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rat& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    Rat& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }

    const Rat& at(size_t i, size_t j) const;

    RatVector row(size_t i) const;
    RatVector col(size_t j) const;

    RatMatrix transpose() const;

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;

    // A^k by repeated squaring; A^0 is the identity.
    RatMatrix pow(unsigned long k) const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    Rat trace() const;
    RatVector row_sums() const;
    RatVector col_sums() const;

    bool is_nonnegative() const;
    bool is_positive() const;

    size_t count_nonzero() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> data_;
};

inline RatMatrix operator*(const Rat& s, const RatMatrix& m) { return m * s; }

// row vector times matrix
RatVector operator*(const RatVector& v, const RatMatrix& m);
// matrix times column vector
RatVector operator*(const RatMatrix& m, const RatVector& v);

Rat dot(const RatVector& a, const RatVector& b);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

} // namespace ssekit
