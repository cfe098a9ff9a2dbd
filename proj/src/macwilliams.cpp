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

#include "lscc/macwilliams.hpp"

#include "lscc/error.hpp"
#include "lscc/gf.hpp"

namespace lscc {

Subspace Subspace::span(const FieldMatrix& generators) {
    return Subspace(generators.rref(), generators.cols());
}

Subspace Subspace::zero(const Field& field, std::size_t n) { return Subspace(FieldMatrix(field, 0, n), n); }

Subspace Subspace::full(const Field& field, std::size_t n) { return Subspace(FieldMatrix::identity(field, n), n); }

Subspace Subspace::random(const Field& field, std::size_t n, Rng& rng) {
    const std::size_t k = rng.below(n + 1);
    return span(FieldMatrix::random(field, k, n, rng));
}

std::vector<Vector> Subspace::elements(std::uint64_t limit) const {
    const std::uint32_t q = field().q();
    const std::uint64_t count = checked_power(q, dim(), limit);
    std::vector<Vector> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (dim() == 0)
            out.emplace_back(n_, 0);
        else
            out.push_back(basis_.apply(vector_from_index(q, dim(), i)));
    }
    return out;
}

Subspace Subspace::orthogonal() const {
    if (dim() == 0) return full(field(), n_);
    // x . b = 0 for every basis row b  <=>  x B^T = 0.
    return Subspace(basis_.transpose().left_kernel(), n_);
}

RationalPoly mw_transform(const RationalPoly& genfun_a, const Field& field, const BigInt& dual_size) {
    const DenseMatrix<CycInt> m = mw_matrix(field);
    CycPoly p = promote(genfun_a);
    for (auto b : blocks_of(genfun_a, "u")) p = substitute_linear(p, "u", b, m);
    p *= CycRational(make_rational(1, dual_size));
    return to_rational(p);
}

RationalPoly mw_transform(const Subspace& a, const Partition& u, std::uint64_t limit) {
    if (u.n() != a.n()) throw Error(ErrorKind::DimensionMismatch, "partition length differs from subspace length");
    const RationalPoly g = genfun_of_set(a.elements(limit), a.field(), u);
    const BigInt dual_size = ipow(a.field().q(), a.n() - a.dim());
    return mw_transform(g, a.field(), dual_size);
}

RationalPoly mw_joint_transform(const RationalPoly& joint_f, const Field& field, std::uint32_t m) {
    const DenseMatrix<CycInt> mat = mw_matrix(field);
    CycPoly p = promote(joint_f);
    for (auto b : blocks_of(joint_f, "u")) p = substitute_linear(p, "u", b, mat);
    for (auto b : blocks_of(joint_f, "v")) p = substitute_linear(p, "v", b, mat);
    p *= CycRational(make_rational(1, ipow(field.q(), m)));
    return to_rational(p);
}

RationalPoly mw_joint_transpose(const FieldMatrix& a, const Partition& u, const Partition& v, const Limits& limits) {
    const RationalPoly f = genfun_of_code(LinearCode(a), u, v, limits);
    return mw_joint_transform(f, a.field(), static_cast<std::uint32_t>(a.cols()));
}

RationalPoly mw_joint_transpose(const FieldMatrix& a, const Limits& limits) {
    return mw_joint_transpose(a, Partition::trivial(a.rows()), Partition::trivial(a.cols()), limits);
}

}  // namespace lscc
