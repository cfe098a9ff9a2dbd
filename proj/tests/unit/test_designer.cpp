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

#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "lscc/designer.hpp"
#include "lscc/mrd.hpp"
#include "lscc/rng.hpp"
#include "oracles.hpp"

using namespace lscc;
using fx::code;
using fx::mat;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

const Field& gf2() {
    static const Field f = Field::of_order(2);
    return f;
}

// Exact product ensemble G o Sigma o F by hand: every pair of codes and every permutation.
std::vector<std::pair<FieldMatrix, Rational>> brute_concat(const CodeEnsemble& f, const CodeEnsemble& g) {
    std::vector<std::pair<FieldMatrix, Rational>> out;
    std::size_t perms = 0;
    for_each_permutation(f.m(), [&](const auto&) { ++perms; });
    for (const auto& a : f.exact_support())
        for (const auto& b : g.exact_support())
            for_each_permutation(f.m(), [&](const auto& perm) {
                const FieldMatrix gen = a.code.generator() * FieldMatrix::permutation(f.field(), perm) * b.code.generator();
                out.emplace_back(gen, a.prob * b.prob / Rational(BigInt(perms)));
            });
    return out;
}

}  // namespace

TEST_CASE("compose fixed codes") {
    const LinearCode id = code(2, 2, 2, {1, 0, 0, 1});
    CHECK(compose(id, {0, 1}, id) == id);
    CHECK(compose(code(2, 1, 2, {1, 1}), {1, 0}, code(2, 2, 1, {1, 1})).generator() == mat(2, 1, 1, {0}));
    const LinearCode a = code(3, 2, 3, {1, 2, 0, 0, 1, 1});
    const LinearCode b = code(3, 3, 2, {1, 0, 2, 1, 1, 1});
    const std::vector<std::size_t> perm{2, 0, 1};
    const LinearCode ab = compose(a, perm, b);
    for (const auto& x : oracle::all_words(3, 2)) CHECK(ab.encode(x) == b.encode(permute(a.encode(x), perm)));
    const LinearCode affine(mat(3, 2, 3, {1, 2, 0, 0, 1, 1}), Vector{1, 0, 2});
    const LinearCode affine_b(mat(3, 3, 2, {1, 0, 2, 1, 1, 1}), Vector{2, 2});
    const LinearCode c = compose(affine, perm, affine_b);
    for (const auto& x : oracle::all_words(3, 2)) CHECK(c.encode(x) == affine_b.encode(permute(affine.encode(x), perm)));
    CHECK(fx::error_kind([&] { compose(a, {0, 1}, b); }) == ErrorKind::DimensionMismatch);
    CHECK(fx::error_kind([&] { compose(a, perm, id); }) == ErrorKind::DimensionMismatch);
    CHECK(fx::error_kind([&] { compose(code(2, 1, 2, {1, 1}), {0, 1}, code(3, 2, 1, {1, 1})); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("compose ensembles") {
    const CodeEnsemble outer = CodeEnsemble::uniform({code(2, 2, 2, {1, 0, 0, 1}), code(2, 2, 2, {1, 1, 0, 1})});
    const CodeEnsemble inner = CodeEnsemble::uniform_all_matrices(gf2(), 2, 2);
    const CodeEnsemble concat = compose(ConcatSpec{outer, std::nullopt, inner});
    REQUIRE(concat.has_exact_support());
    CHECK(rho(concat).rho == doctest::Approx(0.0));
    CHECK(rho(concat).alpha == 1);
    const auto table = alpha_table(ensemble_avg_joint_spectrum(concat));
    for (const auto& [k, v] : table)
        if (!k.first.is_zero_type()) CHECK(v == 1);

    const CodeEnsemble fixed = compose(ConcatSpec{outer, std::vector<std::size_t>{1, 0}, inner});
    Rational total = 0;
    for (const auto& w : fixed.exact_support()) total += w.prob;
    CHECK(total == 1);

    Limits tight;
    tight.max_support = 4;
    CHECK(fx::error_kind([&] { compose(ConcatSpec{outer, std::nullopt, inner}, tight).exact_support(); }) ==
          ErrorKind::SupportExplosion);
}

TEST_CASE("composition law") {
    Rng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + rng.below(2), m = 2 + rng.below(2), l = 1 + rng.below(3);
        std::vector<LinearCode> fs, gs;
        for (int i = 0; i < 2; ++i) {
            fs.emplace_back(FieldMatrix::random(gf2(), n, m, rng));
            gs.emplace_back(FieldMatrix::random(gf2(), m, l, rng));
        }
        const CodeEnsemble f = CodeEnsemble::uniform(fs), g = CodeEnsemble::uniform(gs);
        const CodeEnsemble concat = compose(ConcatSpec{f, std::nullopt, g});
        const ConditionalSpectrum lhs = conditional_spectrum(ensemble_avg_joint_spectrum(concat));
        const ConditionalSpectrum rhs = compose_avg_conditional(f, g);
        for (const auto& [given, row] : lhs.rows)
            for (const auto& [target, v] : row) CHECK(rhs.at(given, target) == v);

        // Against the hand-built product.
        const auto brute = oracle::avg_joint(brute_concat(f, g));
        const JointSpectrum avg = ensemble_avg_joint_spectrum(concat);
        for (const auto& [k, v] : brute) CHECK(avg.at(TypeVector{k.first}, TypeVector{k.second}) == v);
    }
}

TEST_CASE("outer weight window") {
    const WindowReport rep = outer_weight_window(code(2, 1, 5, {1, 1, 1, 1, 1}));
    CHECK(rep.p0_min == 0);
    CHECK(rep.p0_max == 0);
    CHECK(rep.injective);
    CHECK(rep.window.gamma1 == r(1, 2));
    CHECK(outer_weight_window(code(2, 1, 2, {1, 1})).p0_max == 0);

    Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const LinearCode f(FieldMatrix::random(gf2(), 4, 8, rng));
        const WindowReport w = outer_weight_window(f);
        Rational lo = 2, hi = -1;
        for (const auto& x : oracle::all_words(2, 4)) {
            if (std::all_of(x.begin(), x.end(), [](Symbol s) { return s == 0; })) continue;
            const auto y = oracle::times(gf2(), x, f.generator());
            const Rational p0 = make_rational(oracle::counts_of(y, 2)[0], 8);
            lo = std::min(lo, p0);
            hi = std::max(hi, p0);
        }
        CHECK(w.p0_min == lo);
        CHECK(w.p0_max == hi);
        CHECK(w.window.gamma1 == r(1, 2) - lo);
        CHECK(w.window.gamma2 == hi - r(1, 2));
        CHECK(w.injective == (f.generator().rank() == 4));
    }
    const LinearCode z = code(2, 2, 3, {1, 0, 1, 1, 0, 1});
    CHECK(!outer_weight_window(z).injective);
    CHECK(outer_weight_window(z).p0_max == 1);
    CHECK(fx::error_kind([] {
              Limits lim;
              lim.max_domain = 8;
              Rng g(1);
              outer_weight_window(LinearCode(FieldMatrix::random(gf2(), 5, 6, g)), lim);
          }) == ErrorKind::TooLarge);
}

TEST_CASE("design example") {
    DesignInput in;
    in.q = 2;
    in.outer_rate = r(1, 5);
    in.p0_min = r(1, 20);
    in.p0_max = r(19, 20);
    in.delta = 0.05;
    in.inner_rate = r(5, 2);
    const DesignResult res = design_concat(in);
    CHECK(res.gamma == doctest::Approx(0.45));
    CHECK(res.inner_delta == doctest::Approx(0.01));
    CHECK(res.d_min == 35);
    CHECK(res.d == 35);
    CHECK(res.c == 14);
    CHECK(res.rho0 <= 0.01);
    CHECK(res.final_bound <= 0.05);
    CHECK(res.certified);
    // Certificate recomputed from the returned parameters.
    CHECK(rho0(2, double(res.d) / res.c, res.gamma, res.d) / 0.2 <= 0.05);

    DesignInput loose = in;
    loose.delta = 0.1;
    CHECK(design_concat(loose).d_min < 35);
    CHECK(design_concat(loose).certified);

    DesignInput tight = in;
    tight.delta = 0.01;
    const DesignResult t = design_concat(tight);
    CHECK(t.d_min > 35);
    CHECK(t.d % 5 == 0);
    CHECK(t.c * 5 == t.d * 2);

    DesignInput degenerate = in;
    degenerate.p0_min = r(1, 2);
    degenerate.p0_max = r(1, 2);
    CHECK(fx::error_kind([&] { design_concat(degenerate); }) == ErrorKind::DomainError);
    DesignInput half = in;
    half.p0_min = 0;
    CHECK(fx::error_kind([&] { design_concat(half); }) == ErrorKind::DomainError);
}

TEST_CASE("equivalence constructions") {
    const CodeEnsemble id = CodeEnsemble::single(code(2, 2, 2, {1, 0, 0, 1}));
    for (auto mode : {EquivalenceMode::G1, EquivalenceMode::G2}) {
        const EquivalenceReport rep = verify_equivalence(id, mode, true, 0, 0);
        CHECK(rep.exact);
        CHECK(rep.probability == r(3, 8));
        CHECK(rep.kq == doctest::Approx(0.288788095087));
        CHECK(rep.probability > make_rational(288788, 1000000));
    }
    const CodeEnsemble zero = CodeEnsemble::single(code(2, 2, 2, {0, 0, 0, 0}));
    CHECK(verify_equivalence(zero, EquivalenceMode::G1, true, 0, 0).probability == 1);
    CHECK(verify_equivalence(zero, EquivalenceMode::G2, true, 0, 0).probability == 1);

    // Injective F: A Phi is uniform over n x m matrices, full rank with probability prod_{i=m-n+1..m}(1 - q^-i).
    const CodeEnsemble inj = CodeEnsemble::single(code(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(verify_equivalence(inj, EquivalenceMode::G1, true, 0, 0).probability == r(3, 4) * r(7, 8));
    const CodeEnsemble inj3 = CodeEnsemble::single(code(3, 1, 2, {1, 2}));
    CHECK(verify_equivalence(inj3, EquivalenceMode::G1, true, 0, 0).probability == r(8, 9));
    const CodeEnsemble square = CodeEnsemble::single(code(2, 3, 3, {1, 1, 0, 0, 1, 0, 1, 1, 1}));
    CHECK(verify_equivalence(square, EquivalenceMode::G1, true, 0, 0).probability == r(1, 2) * r(3, 4) * r(7, 8));

    // The composed ensemble, enumerated directly.
    const CodeEnsemble g1 = equivalence_G1(id);
    Rational invertible = 0;
    for (const auto& w : g1.exact_support())
        if (w.code.generator().rank() == 2) invertible += w.prob;
    CHECK(invertible == r(3, 8));

    const EquivalenceReport s = verify_equivalence(id, EquivalenceMode::G1, false, 20000, 9);
    CHECK(!s.exact);
    CHECK(s.samples == 20000);
    CHECK(s.ci_low <= 0.375);
    CHECK(s.ci_high >= 0.375);
    CHECK(s.above_kq);
    const EquivalenceReport again = verify_equivalence(id, EquivalenceMode::G1, false, 20000, 9);
    CHECK(again.estimate == s.estimate);
}

TEST_CASE("wilson interval") {
    auto [lo, hi] = wilson_interval(50, 100);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
    auto [z0, z1] = wilson_interval(0, 10);
    CHECK(z0 == doctest::Approx(0.0));
    CHECK(z1 > 0);
}

TEST_CASE("single code lower bound") {
    CHECK(single_code_lower_bound(2, 1) == 2);
    CHECK(single_code_lower_bound(2, 4) == r(8, 3));
    for (std::uint32_t k : {2u, 3u, 4u})
        for (std::uint32_t m = 1; m <= 8; ++m) {
            BigInt num = 1;
            for (std::uint32_t i = 0; i < m; ++i) num *= k;
            Rational expect(num, oracle::max_multinomial(k, m));
            expect.canonicalize();
            CHECK(single_code_lower_bound(k, m) == expect);
        }
    const double b16 = to_double(single_code_lower_bound(2, 16));
    const double b64 = to_double(single_code_lower_bound(2, 64));
    const double b256 = to_double(single_code_lower_bound(2, 256));
    CHECK(b64 / b16 == doctest::Approx(2.0).epsilon(0.03));
    CHECK(b256 / b64 == doctest::Approx(2.0).epsilon(0.01));
    CHECK(fx::error_kind([] { single_code_lower_bound(1, 3); }) == ErrorKind::DomainError);
    CHECK(fx::error_kind([] { single_code_lower_bound(2, 0); }) == ErrorKind::DomainError);

    CHECK(max_alpha(code(2, 1, 1, {1})) == 2);
    Rng rng(5);
    for (int i = 0; i < 8; ++i) {
        const std::size_t n = 1 + rng.below(3), m = 1 + rng.below(5);
        const LinearCode f(FieldMatrix::random(gf2(), n, m, rng));
        const LowerBoundCheck chk = check_lower_bound(f);
        CHECK(chk.respected);
        CHECK(chk.max_alpha >= chk.bound);
        Rational best = 0;
        const auto avg = oracle::joint(f.generator());
        for (const auto& [k, v] : avg) {
            if (k.first[0] == n) continue;
            best = std::max(best, oracle::alpha(avg, k.first, k.second, 2, n, m));
        }
        CHECK(chk.max_alpha == best);
    }
}
