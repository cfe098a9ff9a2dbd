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


#ifndef LSCC_MRD_HPP
#define LSCC_MRD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lscc/ensemble.hpp"
#include "lscc/matrix.hpp"
#include "lscc/rational.hpp"

namespace lscc {

/**
 * (n, m, k) Gabidulin code over GF(q). Codewords are n x m matrices; the
 * construction runs in GF(q^{n'}), n' = max(n, m), with m' = min(n, m)
 * evaluation points, and transposes when m > n.
 */
class GabidulinSpec {
public:
    /// Default basis and points are 1, g, ..., g^{n'-1} for the extension generator g.
    static GabidulinSpec make(const Field& base, std::size_t n, std::size_t m, std::size_t k,
                              std::optional<std::vector<Symbol>> points = std::nullopt,
                              std::optional<std::vector<Symbol>> basis = std::nullopt);

    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }
    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t k() const { return k_; }
    std::size_t n_ext() const { return n_ext_; }  // n'
    std::size_t m_pts() const { return m_pts_; }  // m'
    bool transposed() const { return transposed_; }
    const std::vector<Symbol>& points() const { return points_; }
    const std::vector<Symbol>& basis() const { return basis_; }

    /// Base-field element as an element of the extension.
    Symbol embed(Symbol base_value) const { return embed_[base_value]; }
    /// Coordinates of an extension element over the basis.
    const Vector& coordinates(Symbol ext_value) const { return coords_[ext_value]; }
    /// x^{q^i}.
    Symbol frobenius(Symbol x, std::size_t i) const;

    /// q^{k n'} as a big integer.
    BigInt code_size() const;

private:
    Field base_;
    Field ext_;
    std::size_t n_ = 0, m_ = 0, k_ = 0, n_ext_ = 0, m_pts_ = 0;
    bool transposed_ = false;
    std::vector<Symbol> points_;
    std::vector<Symbol> basis_;
    std::vector<Symbol> embed_;
    std::vector<Vector> coords_;
};

struct MatrixCodeword {
    FieldMatrix entries;
    std::size_t rank = 0;

    explicit MatrixCodeword(FieldMatrix m) : entries(std::move(m)), rank(entries.rank()) {}
};

/// Codeword for message (m_0, ..., m_{k-1}) over the extension: column j holds
/// the coordinates of sum_i m_i x_j^{q^i}.
MatrixCodeword gabidulin_encode(const GabidulinSpec& spec, const std::vector<Symbol>& message);

/// All q^{k n'} codewords, messages in base-|ext| index order (m_0 least significant).
std::vector<MatrixCodeword> enumerate_code(const GabidulinSpec& spec, std::uint64_t limit = 1u << 16);
MatrixCodeword sample_code(const GabidulinSpec& spec, std::uint64_t seed);
MatrixCodeword sample_code(const GabidulinSpec& spec, Rng& rng);

/// Minimum of rank(A - B) over distinct pairs.
std::size_t min_rank_distance(const std::vector<MatrixCodeword>& code);
/// Minimum rank over nonzero codewords; equals the pairwise minimum for linear codes.
std::size_t min_rank_weight(const std::vector<MatrixCodeword>& code);

struct MrdReport {
    BigInt size;
    BigInt expected_size;
    bool distinct = false;
    std::size_t min_distance = 0;
    std::size_t expected_distance = 0;
    BigInt singleton_bound;  // q^{n'(m' - d + 1)}
    bool passed = false;
};

MrdReport verify_mrd(const GabidulinSpec& spec, std::uint64_t limit = 1u << 16);

using MatrixSupport = std::vector<std::pair<FieldMatrix, Rational>>;

MatrixSupport uniform_support(const std::vector<MatrixCodeword>& code);
/// {A + e : A in code}, uniform.
MatrixSupport coset_support(const std::vector<MatrixCodeword>& code, const FieldMatrix& e);
MatrixSupport support_of(const CodeEnsemble& ensemble);
CodeEnsemble ensemble_of(const MatrixSupport& support);
/// Uniform over the Gabidulin code, with exact enumeration.
CodeEnsemble gabidulin_ensemble(const GabidulinSpec& spec, std::uint64_t limit = 1u << 16);

struct SccWitness {
    Vector x;
    Vector y;
    Rational prob;
};

struct SccReport {
    bool uniform = false;           // every x != 0 maps uniformly onto GF(q)^m
    std::optional<SccWitness> witness;
    bool column_property = false;   // {A y^T} = GF(q)^n for every y != 0
    std::optional<Vector> column_witness;
    bool passed() const { return uniform; }
};

SccReport verify_scc(const MatrixSupport& support, std::uint64_t limit = 1u << 20);
SccReport verify_scc(const GabidulinSpec& spec, std::uint64_t limit = 1u << 20);
/// Throws NotSCCGood carrying the witness when verify_scc fails.
void require_scc(const MatrixSupport& support, std::uint64_t limit = 1u << 20);

struct KernelStats {
    std::map<BigInt, Rational> distribution;  // |ker| -> probability
    Rational expected_size;
    Rational prob_injective;                  // P{|ker| = 1}
    Rational identity_value;                  // 1 + q^{-m}(q^n - 1)
    bool identity_holds = false;
    Rational lower_bound;                     // (p - 2 + q^{-n}) / (p - 1), square codes only
    bool bound_applies = false;               // n == m
    bool bound_holds = false;                 // vacuous unless bound_applies
};

KernelStats kernel_stats(const MatrixSupport& support);

}  // namespace lscc

#endif  // LSCC_MRD_HPP
