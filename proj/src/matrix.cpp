#include "ssekit/matrix.hpp"

#include <ostream>
#include <sstream>

namespace ssekit {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0)
        throw dimension_error("RatMatrix: dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_)
            throw dimension_error("RatMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::constant(size_t rows, size_t cols, const Rat& value) {
    RatMatrix m(rows, cols);
    for (auto& e : m.data_)
        e = value;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty() || rows.front().empty())
        throw dimension_error("RatMatrix: dimensions must be positive");
    RatMatrix m(rows.size(), rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw dimension_error("RatMatrix: ragged rows");
        for (size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

const Rat& RatMatrix::at(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_)
        throw dimension_error("RatMatrix: index out of range");
    return (*this)(i, j);
}

RatVector RatMatrix::row(size_t i) const {
    RatVector out(cols_);
    for (size_t j = 0; j < cols_; ++j)
        out[j] = (*this)(i, j);
    return out;
}

RatVector RatMatrix::col(size_t j) const {
    RatVector out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_error("RatMatrix: shape mismatch in +");
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] + o.data_[k];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw dimension_error("RatMatrix: shape mismatch in -");
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] - o.data_[k];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_)
        throw dimension_error("RatMatrix: shape mismatch in *");
    RatMatrix out(rows_, o.cols_);
    const size_t nnz_a = count_nonzero();
    const size_t nnz_b = o.count_nonzero();
    if (nnz_a * o.cols_ <= nnz_b * rows_) {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a.is_zero())
                    continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const Rat& b = o(k, j);
                    if (!b.is_zero())
                        out(i, j) += a * b;
                }
            }
    } else {
        for (size_t k = 0; k < o.rows_; ++k)
            for (size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o(k, j);
                if (b.is_zero())
                    continue;
                for (size_t i = 0; i < rows_; ++i) {
                    const Rat& a = (*this)(i, k);
                    if (!a.is_zero())
                        out(i, j) += a * b;
                }
            }
    }
    return out;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = data_[k] * s;
    return out;
}

RatMatrix RatMatrix::pow(unsigned long k) const {
    if (!is_square())
        throw dimension_error("RatMatrix: pow of non-square matrix");
    RatMatrix result = identity(rows_);
    RatMatrix base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Rat RatMatrix::trace() const {
    if (!is_square())
        throw dimension_error("RatMatrix: trace of non-square matrix");
    Rat t;
    for (size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

RatVector RatMatrix::row_sums() const {
    RatVector out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j);
    return out;
}

RatVector RatMatrix::col_sums() const {
    RatVector out(cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            out[j] += (*this)(i, j);
    return out;
}

bool RatMatrix::is_nonnegative() const {
    for (const auto& e : data_)
        if (e.is_negative())
            return false;
    return true;
}

bool RatMatrix::is_positive() const {
    for (const auto& e : data_)
        if (!e.is_positive())
            return false;
    return true;
}

size_t RatMatrix::count_nonzero() const {
    size_t n = 0;
    for (const auto& e : data_)
        if (!e.is_zero())
            ++n;
    return n;
}

RatVector operator*(const RatVector& v, const RatMatrix& m) {
    if (v.size() != m.rows())
        throw dimension_error("vector*matrix: shape mismatch");
    RatVector out(m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero())
            continue;
        for (size_t j = 0; j < m.cols(); ++j)
            out[j] += v[i] * m(i, j);
    }
    return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.cols())
        throw dimension_error("matrix*vector: shape mismatch");
    RatVector out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                out[i] += m(i, j) * v[j];
    return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size())
        throw dimension_error("dot: length mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "[") << m(i, j);
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

} // namespace ssekit
