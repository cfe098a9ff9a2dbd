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


#ifndef LSCC_ENSEMBLE_HPP
#define LSCC_ENSEMBLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lscc/matrix.hpp"
#include "lscc/rational.hpp"

namespace lscc {

/// Enumeration caps shared by every exact sweep.
struct Limits {
    std::uint64_t max_domain = 1u << 20;        // q^n for domain sweeps
    std::size_t max_permutation_length = 8;     // n! expansions
    std::uint64_t max_support = 1u << 20;       // explicit ensemble support
};

enum class SupportFamily { Explicit, AllMatrices, Gabidulin, Ldgm, Custom };

std::string_view to_string(SupportFamily family);

struct WeightedCode {
    LinearCode code;
    Rational prob;
};

/**
 * Random linear code. Either an explicit support with exact probabilities,
 * or a seeded sampler tagged with its support family. A sampler may carry an
 * enumerator producing its exact support; without one, exact expectations
 * are refused.
 */
class CodeEnsemble {
public:
    using Sampler = std::function<LinearCode(Rng&)>;
    using Enumerator = std::function<std::vector<WeightedCode>()>;

    static CodeEnsemble from_support(std::vector<WeightedCode> support);
    static CodeEnsemble single(LinearCode code);
    static CodeEnsemble uniform(const std::vector<LinearCode>& codes);
    static CodeEnsemble from_sampler(Field field, std::size_t n, std::size_t m, SupportFamily family,
                                     Sampler sampler, Enumerator enumerator = {});

    /// Uniform over all n x m matrices; enumerable when q^{nm} fits the support cap.
    static CodeEnsemble uniform_all_matrices(Field field, std::size_t n, std::size_t m, const Limits& limits = {});

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    SupportFamily family() const { return family_; }
    bool has_exact_support() const { return !support_.empty() || static_cast<bool>(enumerator_); }

    /// Exact support with merged duplicates. Throws UnsupportedSampler if unavailable.
    std::vector<WeightedCode> exact_support() const;

    LinearCode sample(Rng& rng) const;

private:
    CodeEnsemble() = default;

    Field field_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    SupportFamily family_ = SupportFamily::Explicit;
    std::vector<WeightedCode> support_;
    std::vector<double> cumulative_;
    Sampler sampler_;
    Enumerator enumerator_;
};

/// Sums probabilities of identical codes and drops zero entries.
std::vector<WeightedCode> merge_support(std::vector<WeightedCode> support);

enum class RandomizeMode { In, Out, Both, Affine };

/**
 * Symmetrized ensembles: In is F o Sigma_n, Out is Sigma_m o F, Both is
 * Sigma_m o F o Sigma_n, Affine adds an independent uniform offset to Both.
 */
CodeEnsemble randomize(const CodeEnsemble& ensemble, RandomizeMode mode, const Limits& limits = {});

}  // namespace lscc

#endif  // LSCC_ENSEMBLE_HPP
