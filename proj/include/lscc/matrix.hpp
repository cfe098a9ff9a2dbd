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


#ifndef LSCC_MATRIX_HPP
#define LSCC_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "lscc/gf.hpp"
#include "lscc/rng.hpp"

namespace lscc {

using Vector = std::vector<Symbol>;

/// Digits of idx in base q, least significant first.
Vector vector_from_index(std::uint32_t q, std::size_t n, std::uint64_t idx);
std::uint64_t index_of_vector(std::uint32_t q, std::span<const Symbol> x);

/// q^n, or throws TooLarge if it exceeds limit.
std::uint64_t checked_power(std::uint32_t q, std::size_t n, std::uint64_t limit);

/// Dense matrix over GF(q). A code with generator A maps the row vector x to xA.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);
    FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> data);

    static FieldMatrix identity(Field field, std::size_t n);
    /// The idx-th matrix in row-major base-q enumeration of all rows x cols matrices.
    static FieldMatrix from_index(Field field, std::size_t rows, std::size_t cols, std::uint64_t idx);
    static FieldMatrix random(Field field, std::size_t rows, std::size_t cols, Rng& rng);
    /// P with P(i, perm[i]) = 1, so that x P places x[i] at position perm[i].
    static FieldMatrix permutation(Field field, std::span<const std::size_t> perm);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Symbol>& data() const { return data_; }

    Symbol operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Symbol& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    /// x A for a row vector x of length rows().
    Vector apply(std::span<const Symbol> x) const;
    /// A y^T for y of length cols().
    Vector apply_right(std::span<const Symbol> y) const;

    FieldMatrix transpose() const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator-() const;

    bool is_zero() const;
    std::size_t rank() const;
    /// Reduced row echelon form with zero rows dropped.
    FieldMatrix rref() const;
    /// Basis (as rows, in reduced echelon form) of { x : x A = 0 }.
    FieldMatrix left_kernel() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }
    friend std::strong_ordering operator<=>(const FieldMatrix& a, const FieldMatrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    void check_same_shape(const FieldMatrix& o) const;

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

/// Linear (or, with a nonempty offset, affine) map x -> xA + offset.
class LinearCode {
public:
    LinearCode() = default;
    explicit LinearCode(FieldMatrix generator, Vector offset = {});

    const FieldMatrix& generator() const { return generator_; }
    const Vector& offset() const { return offset_; }
    const Field& field() const { return generator_.field(); }
    std::size_t n() const { return generator_.rows(); }
    std::size_t m() const { return generator_.cols(); }
    bool is_linear() const { return offset_.empty(); }

    Vector encode(std::span<const Symbol> x) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.generator_ == b.generator_ && a.offset_ == b.offset_;
    }
    friend std::strong_ordering operator<=>(const LinearCode& a, const LinearCode& b) {
        if (auto c = a.generator_ <=> b.generator_; c != 0) return c;
        return a.offset_ <=> b.offset_;
    }

private:
    FieldMatrix generator_;
    Vector offset_;
};

/// x placed through perm: out[perm[i]] = x[i].
Vector permute(std::span<const Symbol> x, std::span<const std::size_t> perm);

/// Calls fn(perm) for every permutation of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        fn(static_cast<const std::vector<std::size_t>&>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace lscc

#endif  // LSCC_MATRIX_HPP
