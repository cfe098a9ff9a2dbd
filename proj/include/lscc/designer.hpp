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


#ifndef LSCC_DESIGNER_HPP
#define LSCC_DESIGNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lscc/ensemble.hpp"
#include "lscc/ldgm.hpp"
#include "lscc/spectra.hpp"

namespace lscc {

/// Outer code, interleaver, inner code. Without an explicit interleaver the
/// interleaver is uniform over all permutations.
struct ConcatSpec {
    CodeEnsemble outer;
    std::optional<std::vector<std::size_t>> interleaver;
    CodeEnsemble inner;
};

/// x -> inner(sigma(outer(x))), generator A_outer P_sigma A_inner.
LinearCode compose(const LinearCode& outer, const std::vector<std::size_t>& interleaver, const LinearCode& inner);
/// Product ensemble with independent stages; exact when both stages are and the support fits.
CodeEnsemble compose(const ConcatSpec& spec, const Limits& limits = {});

struct WeightWindow {
    Rational gamma1;  // P(0) >= 1/q - gamma1
    Rational gamma2;  // P(0) <= 1/q + gamma2
};

struct WindowReport {
    Rational p0_min;
    Rational p0_max;
    WeightWindow window;
    bool injective = false;
    std::uint64_t codewords = 0;  // nonzero inputs examined
};

/// Range of P(0) over the images of nonzero inputs.
WindowReport outer_weight_window(const LinearCode& f, const Limits& limits = {});

struct DesignInput {
    std::uint32_t q = 2;
    Rational outer_rate;  // R(f) = n / m of the outer code
    Rational p0_min;
    Rational p0_max;
    double delta = 0;     // target for the concatenation
    Rational inner_rate;  // r0 = d / c
};

struct DesignResult {
    DesignInput input;
    double gamma1 = 0;
    double gamma2 = 0;
    double gamma = 0;
    double inner_delta = 0;  // delta R(f)
    std::uint32_t d_min = 0;
    std::uint32_t c = 0;
    std::uint32_t d = 0;
    double rho0 = 0;
    double final_bound = 0;  // rho0 / R(f)
    bool certified = false;  // recomputed rho0 / R(f) <= delta
};

DesignResult design_concat(const DesignInput& input);

enum class EquivalenceMode { G1, G2 };

/// G1 = Phi_{q,m,m} o F (generator A Phi); G2 = F o Phi_{q,n,n} (generator Phi A).
CodeEnsemble equivalence_G1(const CodeEnsemble& f, const Limits& limits = {});
CodeEnsemble equivalence_G2(const CodeEnsemble& f, const Limits& limits = {});

struct EquivalenceReport {
    EquivalenceMode mode = EquivalenceMode::G1;
    bool exact = false;
    Rational probability;     // exact mode
    double estimate = 0;
    double ci_low = 0;        // Wilson 95%, sampled mode
    double ci_high = 0;
    std::uint64_t samples = 0;
    double kq = 0;
    bool above_kq = false;
};

/// P{ker G1 = ker F} (G1) or P{G2(X^n) = F(X^n)} (G2).
EquivalenceReport verify_equivalence(const CodeEnsemble& f, EquivalenceMode mode, bool exact, std::uint64_t samples,
                                     std::uint64_t seed, const Limits& limits = {});

/// Wilson score interval at z = 1.96.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// |Y|^m / max_Q multinomial(m, mQ).
Rational single_code_lower_bound(std::uint32_t alphabet_size, std::uint32_t m);

struct LowerBoundCheck {
    Rational bound;
    Rational max_alpha;
    bool respected = false;
};

/// max over P != 0, Q of alpha(f)(P, Q).
Rational max_alpha(const LinearCode& f, const Limits& limits = {});
LowerBoundCheck check_lower_bound(const LinearCode& f, const Limits& limits = {});

}  // namespace lscc

#endif  // LSCC_DESIGNER_HPP
