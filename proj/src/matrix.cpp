/*
   Copyright 2026 The lscc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lscc/matrix.hpp"

#include <utility>

#include "lscc/error.hpp"

namespace lscc {

Vector vector_from_index(std::uint32_t q, std::size_t n, std::uint64_t idx) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = static_cast<Symbol>(idx % q);
        idx /= q;
    }
    return x;
}

std::uint64_t index_of_vector(std::uint32_t q, std::span<const Symbol> x) {
    std::uint64_t idx = 0;
    for (std::size_t i = x.size(); i-- > 0;) idx = idx * q + x[i];
    return idx;
}

std::uint64_t checked_power(std::uint32_t q, std::size_t n, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > limit / q)
            throw Error(ErrorKind::TooLarge,
                        std::to_string(q) + "^" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
        r *= q;
    }
    if (r > limit) throw Error(ErrorKind::TooLarge, "enumeration exceeds limit " + std::to_string(limit));
    return r;
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "matrix data size mismatch");
    for (Symbol s : data_)
        if (s >= field_.q()) throw Error(ErrorKind::DomainError, "matrix entry outside the field");
}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
    FieldMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_index(Field field, std::size_t rows, std::size_t cols, std::uint64_t idx) {
    const std::uint32_t q = field.q();
    return FieldMatrix(std::move(field), rows, cols, vector_from_index(q, rows * cols, idx));
}

FieldMatrix FieldMatrix::random(Field field, std::size_t rows, std::size_t cols, Rng& rng) {
    FieldMatrix m(std::move(field), rows, cols);
    for (auto& s : m.data_) s = static_cast<Symbol>(rng.below(m.field_.q()));
    return m;
}

FieldMatrix FieldMatrix::permutation(Field field, std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    FieldMatrix m(std::move(field), n, n);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]]) throw Error(ErrorKind::DomainError, "not a permutation");
        seen[perm[i]] = true;
        m(i, perm[i]) = 1;
    }
    return m;
}

Vector FieldMatrix::apply(std::span<const Symbol> x) const {
    if (x.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix rows");
    Vector y(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        const Symbol* row = &data_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j) y[j] = field_.add(y[j], field_.mul(x[i], row[j]));
    }
    return y;
}

Vector FieldMatrix::apply_right(std::span<const Symbol> y) const {
    if (y.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix cols");
    Vector x(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) x[i] = field_.add(x[i], field_.mul((*this)(i, j), y[j]));
    return x;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    if (!(field_ == o.field_)) throw Error(ErrorKind::DomainError, "matrices over different fields");
    FieldMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Symbol a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = field_.add(r(i, j), field_.mul(a, o(k, j)));
        }
    return r;
}

void FieldMatrix::check_same_shape(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    check_same_shape(o);
    FieldMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    check_same_shape(o);
    FieldMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix r = *this;
    for (auto& s : r.data_) s = field_.neg(s);
    return r;
}

bool FieldMatrix::is_zero() const {
    for (Symbol s : data_)
        if (s != 0) return false;
    return true;
}

FieldMatrix FieldMatrix::rref() const {
    FieldMatrix a = *this;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows_ && a(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != lead_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(lead_row, j));
        const Symbol inv = field_.inv(a(lead_row, col));
        for (std::size_t j = 0; j < cols_; ++j) a(lead_row, j) = field_.mul(a(lead_row, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead_row || a(i, col) == 0) continue;
            const Symbol factor = a(i, col);
            for (std::size_t j = 0; j < cols_; ++j)
                a(i, j) = field_.sub(a(i, j), field_.mul(factor, a(lead_row, j)));
        }
        ++lead_row;
    }
    a.data_.resize(lead_row * cols_);
    a.rows_ = lead_row;
    return a;
}

std::size_t FieldMatrix::rank() const { return rref().rows(); }

FieldMatrix FieldMatrix::left_kernel() const {
    // x A = 0  <=>  A^T x^T = 0: right null space of A^T.
    const FieldMatrix r = transpose().rref();
    const std::size_t n = rows_;
    std::vector<std::size_t> pivot_col(r.rows());
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (r(i, j) == 0) ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }
    std::vector<Symbol> basis;
    std::size_t count = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = field_.neg(r(i, free));
        basis.insert(basis.end(), v.begin(), v.end());
        ++count;
    }
    return FieldMatrix(field_, count, n, std::move(basis)).rref();
}

LinearCode::LinearCode(FieldMatrix generator, Vector offset)
    : generator_(std::move(generator)), offset_(std::move(offset)) {
    if (generator_.rows() == 0 || generator_.cols() == 0)
        throw Error(ErrorKind::DimensionMismatch, "code dimensions must be at least 1");
    if (!offset_.empty() && offset_.size() != generator_.cols())
        throw Error(ErrorKind::DimensionMismatch, "offset length must equal output length");
    bool all_zero = true;
    for (Symbol s : offset_) all_zero = all_zero && s == 0;
    if (all_zero) offset_.clear();
}

Vector LinearCode::encode(std::span<const Symbol> x) const {
    Vector y = generator_.apply(x);
    const Field& f = generator_.field();
    for (std::size_t j = 0; j < offset_.size(); ++j) y[j] = f.add(y[j], offset_[j]);
    return y;
}

Vector permute(std::span<const Symbol> x, std::span<const std::size_t> perm) {
    if (x.size() != perm.size()) throw Error(ErrorKind::DimensionMismatch, "permutation length mismatch");
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[perm[i]] = x[i];
    return out;
}

}  // namespace lscc
