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


#ifndef LSCC_MACWILLIAMS_HPP
#define LSCC_MACWILLIAMS_HPP

#include <cstdint>
#include <vector>

#include "lscc/genfun.hpp"
#include "lscc/matrix.hpp"

namespace lscc {

/// Subspace of GF(q)^n held by its reduced row echelon basis.
class Subspace {
public:
    /// Row space of the given generators.
    static Subspace span(const FieldMatrix& generators);
    static Subspace zero(const Field& field, std::size_t n);
    static Subspace full(const Field& field, std::size_t n);
    /// Uniformly random generators of a random dimension in [0, n].
    static Subspace random(const Field& field, std::size_t n, Rng& rng);

    const Field& field() const { return basis_.field(); }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const FieldMatrix& basis() const { return basis_; }
    BigInt size() const { return ipow(field().q(), dim()); }

    /// All members in index order of their coordinates over the basis.
    std::vector<Vector> elements(std::uint64_t limit = 1u << 20) const;

    Subspace orthogonal() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    Subspace(FieldMatrix basis, std::size_t n) : basis_(std::move(basis)), n_(n) {}

    FieldMatrix basis_;
    std::size_t n_ = 0;
};

/// G(A^perp)(u) = (1/|A^perp|) G(A)((u_U M)_U), computed from the U-spectrum of A.
RationalPoly mw_transform(const Subspace& a, const Partition& u, std::uint64_t limit = 1u << 20);

/// Transform of an arbitrary genfun in family u over blocks, given |A^perp|.
RationalPoly mw_transform(const RationalPoly& genfun_a, const Field& field, const BigInt& dual_size);

/**
 * (1/q^m) G(f)((u_U M), (v_V M)) for a joint genfun of f: X^n -> Y^m in
 * families u (input) and v (output). The result is the joint genfun of -g
 * with g(y) = y A^T, whose input family is v and output family is u.
 */
RationalPoly mw_joint_transform(const RationalPoly& joint_f, const Field& field, std::uint32_t m);

/// mw_joint_transform applied to the joint genfun of x -> xA.
RationalPoly mw_joint_transpose(const FieldMatrix& a, const Partition& u, const Partition& v, const Limits& limits = {});
RationalPoly mw_joint_transpose(const FieldMatrix& a, const Limits& limits = {});

}  // namespace lscc

#endif  // LSCC_MACWILLIAMS_HPP
