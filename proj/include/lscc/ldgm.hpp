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


#ifndef LSCC_LDGM_HPP
#define LSCC_LDGM_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "lscc/ensemble.hpp"
#include "lscc/genfun.hpp"
#include "lscc/spectra.hpp"

namespace lscc {

// ---- single-symbol codes and their spectra --------------------------------

/// (1/q) sum_a u_a v_a^c.
RationalPoly rep_genfun(std::uint32_t q, std::uint32_t c);
/// rep_genfun with the multiplier kernel applied to both sides.
RationalPoly rrep_genfun(const Field& field, std::uint32_t c);
/// Diagonal joint spectrum of the n-fold repetition code: mass S(F_q^n)(P) at (P, cP).
JointSpectrum rep_joint_spectrum(const Field& field, std::uint32_t c, std::uint32_t n, std::uint64_t limit = 1u << 20);

/// E[G(rchk_{q,d,n})] with one u block (length dn) and one v block (length n).
RationalPoly chk_avg_genfun(std::uint32_t q, std::uint32_t d, std::uint32_t n);
/// E[S(rchk_{q,d,n})(P, Q)], P a type of length dn, Q of length n.
Rational chk_avg_spectrum(std::uint32_t q, std::uint32_t d, std::uint32_t n, const TypeVector& p, const TypeVector& q_type);
/// Upper bound g2(O, P, Q); O must be positive wherever P is.
Rational g2_bound(std::uint32_t q, std::uint32_t d, std::uint32_t n, const TypeVector& o, const TypeVector& p,
                  const TypeVector& q_type);

/// Type with every count multiplied by c.
TypeVector stretch(const TypeVector& p, std::uint32_t c);

// ---- regular LDGM ensemble ------------------------------------------------

struct LdgmParams {
    Field field;
    std::uint32_t c = 1;
    std::uint32_t d = 1;
    std::uint32_t n = 1;
    std::uint32_t c_prime = 1;  // c / gcd(c, d)
    std::uint32_t d_prime = 1;  // d / gcd(c, d)

    static LdgmParams make(const Field& field, std::uint32_t c, std::uint32_t d, std::uint32_t n);

    std::uint32_t input_length() const { return d_prime * n; }
    std::uint32_t output_length() const { return c_prime * n; }
    std::uint32_t edge_count() const { return c * d_prime * n; }
};

/// One edge from input symbol to check: input i, copy slot, permuted position, check, multiplier.
struct LdgmEdge {
    std::uint32_t input = 0;
    std::uint32_t slot = 0;
    std::uint32_t position = 0;
    std::uint32_t check = 0;
    Symbol multiplier = 1;
};

struct LdgmSample {
    LdgmParams params;
    std::vector<std::size_t> permutation;
    std::vector<Symbol> multipliers;              // per intermediate position, after permutation
    std::vector<LdgmEdge> edges;
    /// Per-row (column, coefficient) after summing parallel edges; zero sums dropped.
    std::vector<std::vector<std::pair<std::size_t, Symbol>>> rows;

    FieldMatrix generator() const;
};

/// Generator of chk o rm o Sigma o rep for a fixed permutation and multiplier pattern.
LdgmSample ldgm_build(const LdgmParams& params, std::vector<std::size_t> permutation, std::vector<Symbol> multipliers);
LdgmSample ldgm_sample(const LdgmParams& params, std::uint64_t seed);
LdgmSample ldgm_sample(const LdgmParams& params, Rng& rng);

/// Exact ensemble over all permutations and multiplier patterns; needs c d' n <= 8.
CodeEnsemble ldgm_ensemble_exact(const LdgmParams& params, const Limits& limits = {});
/// Sampler-only ensemble tagged as LDGM, exact when the caps allow.
CodeEnsemble ldgm_ensemble(const LdgmParams& params, const Limits& limits = {});

/// E[S(LDGM)(Q|P)] = E[S(rchk_{q,d,c'n})(Q|cP)].
Rational ldgm_conditional_spectrum(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type);
/// alpha(LDGM)(P, Q) from the exact conditional.
Rational ldgm_alpha(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type);
/// (c/d) delta(P(0), Q(0)) + c Delta_{q, c'dn}(P).
double ldgm_alpha_bound(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type);

// ---- real-valued bound chain ----------------------------------------------

/// Binary divergence D(x || y), +inf when y in {0, 1} and x != y.
double divergence(double x, double y);
/// Natural-log entropy of a type.
double entropy(const TypeVector& p);
/// H(P) - (1/n) ln multinomial(n, nP), n the type's length.
double Delta(const TypeVector& p);
/// J_{q,d}(x, y); may return -inf.
double J(std::uint32_t q, std::uint32_t d, double x, double y);
/// ln[1 + (qy - 1)((qx - 1)/(q - 1))^d].
double j_upper_bound(std::uint32_t q, std::uint32_t d, double x, double y);

struct DeltaOptions {
    std::size_t grid = 10000;
    double tol = 1e-9;
};

/// inf over 0 < xh < 1 of d D(x || xh) + J(xh, y).
double delta_qd(std::uint32_t q, std::uint32_t d, double x, double y, const DeltaOptions& options = {});

struct Rho0Result {
    double gamma = 0;
    std::uint32_t d_min = 0;
    double rho0 = 0;          // at d_min
    double rho0_previous = 0; // at d_min - 1 (+inf when d_min = 1)
};

/// (1/r0) ln[1 + (q - 1)(q gamma/(q - 1))^d].
double rho0(std::uint32_t q, double r0, double gamma, std::uint32_t d);
Rho0Result rho0_and_dq(std::uint32_t q, double r0, double gamma1, double gamma2, double delta);

// ---- K_q ------------------------------------------------------------------

/// prod_{i=1}^{terms} (1 - q^{-i}).
mpf_class kq_product(std::uint32_t q, std::uint32_t terms, unsigned precision_bits = 256);
/// 1 + sum_{k=1}^{terms} (-1)^k [q^{-3k(k-1)/2} + q^{-3k(k+1)/2}].
mpf_class kq_pentagonal(std::uint32_t q, std::uint32_t terms, unsigned precision_bits = 256);
Rational kq_partial_product(std::uint32_t q, std::uint32_t terms);
std::string format_mpf(const mpf_class& x, int digits = 15);

}  // namespace lscc

#endif  // LSCC_LDGM_HPP
