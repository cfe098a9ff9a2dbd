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


#ifndef LSCC_SPECTRA_HPP
#define LSCC_SPECTRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lscc/ensemble.hpp"
#include "lscc/matrix.hpp"
#include "lscc/rational.hpp"

namespace lscc {

/// Symbol counts of a sequence, indexed by field element.
struct TypeVector {
    std::vector<std::uint32_t> counts;

    TypeVector() = default;
    explicit TypeVector(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

    std::uint32_t n() const;
    std::uint32_t q() const { return static_cast<std::uint32_t>(counts.size()); }
    std::uint32_t operator[](Symbol a) const { return counts[a]; }
    /// True for the type of the all-zero sequence.
    bool is_zero_type() const;
    /// P(a) = counts(a) / n.
    Rational prob(Symbol a) const;

    static TypeVector zero_type(std::uint32_t q, std::uint32_t n);

    friend bool operator==(const TypeVector&, const TypeVector&) = default;
    friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

/// Disjoint nonempty blocks covering {0..n-1}, kept in the given block order.
class Partition {
public:
    Partition() = default;
    /// Validates disjointness and coverage; throws InvalidPartition.
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

    static Partition trivial(std::size_t n);
    static Partition singletons(std::size_t n);
    static Partition random(std::size_t n, Rng& rng);

    std::size_t n() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    /// Index of the block containing coordinate i.
    std::size_t block_of(std::size_t i) const { return owner_[i]; }

    bool is_refinement_of(const Partition& coarse) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.n_ == b.n_ && a.blocks_ == b.blocks_; }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> owner_;
};

TypeVector type_of(std::span<const Symbol> seq, std::uint32_t q);

/// One type per block of the partition.
using UType = std::vector<TypeVector>;
UType u_type_of(std::span<const Symbol> seq, std::uint32_t q, const Partition& partition);

/// All compositions of n into q parts, lexicographically ascending; throws
/// TooLarge when there are more than limit of them.
std::vector<TypeVector> enumerate_types(std::uint32_t n, std::uint32_t q, std::uint64_t limit = 1u << 20);

BigInt type_class_size(const TypeVector& type);

struct Spectrum {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::map<TypeVector, Rational> entries;

    Rational at(const TypeVector& type) const;
    Rational total() const;
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct USpectrum {
    std::uint32_t q = 0;
    Partition partition;
    std::map<UType, Rational> entries;

    Rational at(const UType& type) const;
    Rational total() const;
    friend bool operator==(const USpectrum& a, const USpectrum& b) {
        return a.q == b.q && a.partition == b.partition && a.entries == b.entries;
    }
};

struct JointSpectrum {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::map<std::pair<TypeVector, TypeVector>, Rational> entries;

    Rational at(const TypeVector& p, const TypeVector& q) const;
    Rational total() const;
    Spectrum marginal_x() const;
    Spectrum marginal_y() const;
    friend bool operator==(const JointSpectrum&, const JointSpectrum&) = default;
};

Spectrum space_spectrum(std::uint32_t n, const Field& field, std::uint64_t limit = 1u << 20);

/// Spectrum of a nonempty set of equal-length sequences (duplicates count once each as given).
Spectrum set_spectrum(const std::vector<Vector>& set, const Field& field);
USpectrum u_set_spectrum(const std::vector<Vector>& set, const Field& field, const Partition& partition);

/// Joint spectrum of a nonempty relation of (x, y) pairs.
JointSpectrum relation_spectrum(const std::vector<std::pair<Vector, Vector>>& relation, const Field& field);

JointSpectrum code_joint_spectrum(const LinearCode& code, const Limits& limits = {});
Spectrum kernel_spectrum(const LinearCode& code, const Limits& limits = {});
Spectrum image_spectrum(const LinearCode& code, const Limits& limits = {});

/// E[S_XY(F)] over the exact support.
JointSpectrum ensemble_avg_joint_spectrum(const CodeEnsemble& ensemble, const Limits& limits = {});

/// alpha(F)(P, Q) = E[S_XY(F)(P,Q)] / (S(X^n)(P) S(Y^m)(Q)).
Rational alpha(const JointSpectrum& avg, const TypeVector& p, const TypeVector& q);
Rational alpha(const CodeEnsemble& ensemble, const TypeVector& p, const TypeVector& q, const Limits& limits = {});
/// Every (P, Q) pair with its alpha, including zeros.
std::map<std::pair<TypeVector, TypeVector>, Rational> alpha_table(const JointSpectrum& avg);

struct RhoResult {
    double rho = 0;  // -inf if every alpha vanishes
    Rational alpha;  // the maximizing alpha
    TypeVector p;
    TypeVector q;
};

/// max over P != 0 and Q with alpha(P, Q) > 0 of (1/n) ln alpha(P, Q).
RhoResult rho(const JointSpectrum& avg);
RhoResult rho(const CodeEnsemble& ensemble, const Limits& limits = {});

enum class Direction { Forward, Backward };

/// S(target | given). Forward conditions on the X type, Backward on the Y type.
struct ConditionalSpectrum {
    Direction direction = Direction::Forward;
    std::map<TypeVector, std::map<TypeVector, Rational>> rows;

    /// Throws ZeroMarginal if the given type has no mass.
    Rational at(const TypeVector& given, const TypeVector& target) const;
    const std::map<TypeVector, Rational>& row(const TypeVector& given) const;
};

ConditionalSpectrum conditional_spectrum(const JointSpectrum& joint, Direction direction = Direction::Forward);

/// sum_P E[S(F)(P|O)] E[S(G)(Q|P)], the average conditional spectrum of G o Sigma o F.
ConditionalSpectrum compose_avg_conditional(const CodeEnsemble& f, const CodeEnsemble& g, const Limits& limits = {});
ConditionalSpectrum compose_conditionals(const ConditionalSpectrum& f, const ConditionalSpectrum& g);

struct Rates {
    double source = 0;   // R_s = (1/n) ln |f(X^n)|
    double channel = 0;  // R_c = (1/m) ln |f(X^n)|
    Rational ratio;      // R = n / m
    std::size_t rank = 0;
};

Rates rates(const LinearCode& code);

}  // namespace lscc

#endif  // LSCC_SPECTRA_HPP
