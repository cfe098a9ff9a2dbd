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

#include "fixtures.hpp"
#include "lscc/genfun.hpp"
#include "lscc/ldgm.hpp"
#include "lscc/macwilliams.hpp"
#include "lscc/rng.hpp"
#include "oracles.hpp"

using namespace lscc;
using fx::mat;

namespace {

RationalPoly u(Symbol a, std::uint32_t block = 0) { return RationalPoly::variable(Var{"u", block, a}); }
RationalPoly v(Symbol a, std::uint32_t block = 0) { return RationalPoly::variable(Var{"v", block, a}); }
RationalPoly k(long num, long den = 1) { return RationalPoly::constant(make_rational(num, den)); }
Rational r(long a, long b = 1) { return make_rational(a, b); }

std::vector<Vector> random_set(Rng& rng, std::uint32_t q, std::size_t n, std::size_t max_size) {
    std::set<Vector> s;
    const std::size_t count = 1 + rng.below(max_size);
    for (std::size_t i = 0; i < count; ++i) {
        Vector w(n);
        for (auto& x : w) x = static_cast<Symbol>(rng.below(q));
        s.insert(w);
    }
    return {s.begin(), s.end()};
}

// Splits each block of coarse at random into a refinement.
Partition refine(const Partition& coarse, Rng& rng) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : coarse.blocks()) {
        std::vector<std::size_t> left, right;
        for (auto i : b) (rng.below(2) ? left : right).push_back(i);
        if (left.empty()) std::swap(left, right);
        blocks.push_back(left);
        if (!right.empty()) blocks.push_back(right);
    }
    return Partition(coarse.n(), blocks);
}

const Field& gf(std::uint32_t q) {
    static std::map<std::uint32_t, Field> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Field::of_order(q)).first;
    return it->second;
}

}  // namespace

TEST_CASE("genfun_of_set examples") {
    const std::vector<Vector> a{{0, 0}, {1, 1}};
    CHECK(genfun_of_set(a, gf(2)) == (u(0) * u(0) + u(1) * u(1)) * r(1, 2));
    CHECK(genfun_of_set({{0}, {1}}, gf(2)) == (u(0) + u(1)) * r(1, 2));
    CHECK(genfun_of_set({{0, 1}, {1, 0}}, gf(2)) == u(0) * u(1));
    const RationalPoly g = genfun_of_set(a, gf(2));
    CHECK(g.coef({{Var{"u", 0, 0}, 2}}) == r(1, 2));
    CHECK(g.coef({{Var{"u", 0, 0}, 1}, {Var{"u", 0, 1}, 1}}) == 0);
    CHECK(genfun_of_set(oracle::all_words(2, 2), gf(2)).coef({{Var{"u", 0, 0}, 1}, {Var{"u", 0, 1}, 1}}) == r(1, 2));
}

TEST_CASE("set genfuns evaluate to one") {
    Rng rng(1);
    for (int i = 0; i < 30; ++i) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng.below(3));
        const std::size_t n = 1 + rng.below(5);
        const auto a = random_set(rng, q, n, 10);
        CHECK(genfun_of_set(a, gf(q)).sum_of_coefficients() == 1);
        CHECK(genfun_of_set(a, gf(q), Partition::random(n, rng)).sum_of_coefficients() == 1);
    }
}

TEST_CASE("products") {
    const RationalPoly half = (u(0) + u(1)) * r(1, 2);
    CHECK(half * half == (u(0) * u(0) + k(2) * u(0) * u(1) + u(1) * u(1)) * r(1, 4));
    CHECK(half * half == genfun_of_set(oracle::all_words(2, 2), gf(2)));
    CHECK(half * k(1) == half);
    CHECK(half.pow(3) == half * half * half);

    // Two parallel repetition codes: the joint genfun is the square of one copy.
    const RationalPoly par = genfun_of_code(LinearCode(mat(2, 2, 4, {1, 1, 0, 0, 0, 0, 1, 1})));
    CHECK(par == rep_genfun(2, 2) * rep_genfun(2, 2));

    const CycPoly a = CycPoly::constant(CycRational::zeta_power(2, 1));
    const CycPoly b = CycPoly::constant(CycRational::zeta_power(3, 1));
    CHECK(fx::error_kind([&] { (void)(a * b); }) == ErrorKind::RingMismatch);
}

TEST_CASE("genfun of a product set is the product of genfuns") {
    Rng rng(2);
    for (int i = 0; i < 25; ++i) {
        const std::uint32_t q = i % 2 ? 3 : 2;
        const std::size_t n1 = 1 + rng.below(3), n2 = 1 + rng.below(3);
        const auto a = random_set(rng, q, n1, 16), b = random_set(rng, q, n2, 16);
        std::vector<Vector> prod;
        for (const auto& x : a)
            for (const auto& y : b) {
                Vector z = x;
                z.insert(z.end(), y.begin(), y.end());
                prod.push_back(z);
            }
        std::vector<std::size_t> first(n1), second(n2);
        std::iota(first.begin(), first.end(), 0);
        std::iota(second.begin(), second.end(), n1);
        const RationalPoly gb = genfun_of_set(b, gf(q)).map_vars([](const Var& x) { return Var{x.family, 1, x.symbol}; });
        CHECK(genfun_of_set(prod, gf(q), Partition(n1 + n2, {first, second})) == genfun_of_set(a, gf(q)) * gb);
    }
}

TEST_CASE("merge_refinement") {
    const RationalPoly fine = (u(0, 0) * u(0, 1) + u(1, 0) * u(1, 1)) * r(1, 2);
    CHECK(merge_refinement(fine, Partition::trivial(2), Partition::singletons(2)) == (u(0) * u(0) + u(1) * u(1)) * r(1, 2));
    const RationalPoly per = genfun_of_set(oracle::all_words(2, 2), gf(2), Partition::singletons(2));
    CHECK(merge_refinement(per, Partition::trivial(2), Partition::singletons(2)) == ((u(0) + u(1)) * r(1, 2)).pow(2));
    CHECK(fx::error_kind([&] {
              merge_refinement(per, Partition::singletons(2), Partition::trivial(2));
          }) == ErrorKind::NotARefinement);

    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t q = i % 3 == 0 ? 3 : 2;
        const std::size_t n = 1 + rng.below(6);
        const Partition coarse = Partition::random(n, rng);
        const Partition fine2 = refine(coarse, rng);
        const auto a = random_set(rng, q, n, 12);
        CHECK(merge_refinement(genfun_of_set(a, gf(q), fine2), coarse, fine2) == genfun_of_set(a, gf(q), coarse));
    }
}

TEST_CASE("merging a parallel code's joint genfun") {
    // f1 (x) f2 with x -> (x, x) and x -> x, per-code blocks merged to single blocks.
    const LinearCode f(mat(2, 2, 3, {1, 1, 0, 0, 0, 1}));
    const Partition u_fine = Partition::singletons(2);
    const Partition v_fine(3, {{0, 1}, {2}});
    const RationalPoly g = genfun_of_code(f, u_fine, v_fine);
    const RationalPoly merged =
        merge_refinement(merge_refinement(g, Partition::trivial(2), u_fine, "u"), Partition::trivial(3), v_fine, "v");
    CHECK(merged == genfun_of_code(f));
    CHECK(merged == rep_genfun(2, 2) * rep_genfun(2, 1));
}

TEST_CASE("substitute_linear") {
    const auto m2 = mw_matrix(gf(2));
    const RationalPoly g = (u(0) * u(0) + u(1) * u(1)) * r(1, 2);
    CHECK(to_rational(substitute_linear(g, "u", 0, m2)) == u(0) * u(0) + u(1) * u(1));
    CHECK(to_rational(substitute_linear(k(3, 7), "u", 0, m2)) == k(3, 7));
    CHECK(to_rational(substitute_linear(u(0) + u(1), "u", 0, m2)) == k(2) * u(0));
    CHECK(fx::error_kind([&] { substitute_linear(u(2), "u", 0, m2); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("applying the character matrix twice scales by q^n") {
    Rng rng(4);
    for (std::uint32_t q : {2u, 3u, 4u})
        for (int i = 0; i < 6; ++i) {
            const std::size_t n = 1 + rng.below(q == 2 ? 5 : 3);
            const Subspace a = Subspace::random(gf(q), n, rng);
            const RationalPoly g = genfun_of_set(a.elements(), gf(q));
            const auto m = mw_matrix(gf(q));
            const RationalPoly twice = to_rational(substitute_linear(substitute_linear(g, "u", 0, m), "u", 0, m));
            // -A = A for a subspace.
            CHECK(twice == g * Rational(ipow(q, n)));
        }
}

TEST_CASE("expect_rename") {
    CHECK(rrep_genfun(gf(2), 3) == rep_genfun(2, 3));
    CHECK(rep_genfun(2, 2) == (u(0) * v(0) * v(0) + u(1) * v(1) * v(1)) * r(1, 2));
    CHECK(rep_genfun(3, 1) == (u(0) * v(0) + u(1) * v(1) + u(2) * v(2)) * r(1, 3));
    const RationalPoly half_v = (v(1) + v(2)) * r(1, 2);
    CHECK(rrep_genfun(gf(3), 2) == (u(0) * v(0) * v(0) + (u(1) + u(2)) * half_v * half_v) * r(1, 3));

    // Closed form for GF(4), c = 3.
    RationalPoly su, sv;
    for (Symbol a = 1; a < 4; ++a) {
        su += u(a);
        sv += v(a);
    }
    CHECK(rrep_genfun(gf(4), 3) == (u(0) * v(0).pow(3) + su * (sv * r(1, 3)).pow(3)) * r(1, 4));

    DenseMatrix<Rational> id(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(expect_rename(rep_genfun(3, 2), "u", 0, id) == rep_genfun(3, 2));
    DenseMatrix<Rational> bad(2, 2, Rational(1, 3));
    CHECK(fx::error_kind([&] { expect_rename(rep_genfun(2, 1), "u", 0, bad); }) == ErrorKind::NotStochastic);
    DenseMatrix<Rational> neg(2, 2, Rational(0));
    neg(0, 0) = 2;
    neg(0, 1) = -1;
    neg(1, 1) = 1;
    CHECK(fx::error_kind([&] { expect_rename(rep_genfun(2, 1), "u", 0, neg); }) == ErrorKind::NotStochastic);
}

TEST_CASE("multiplier renaming commutes with parallel products") {
    for (std::uint32_t q : {3u, 4u, 5u}) {
        const auto kern = multiplier_kernel(gf(q));
        const RationalPoly a = rep_genfun(q, 2);
        const RationalPoly b = rep_genfun(q, 1).map_vars([](const Var& x) { return Var{x.family, 1, x.symbol}; });
        const RationalPoly lhs = expect_rename_all(expect_rename_all(a * b, "u", kern), "v", kern);
        const RationalPoly rhs = expect_rename_all(expect_rename_all(a, "u", kern), "v", kern) *
                                 expect_rename_all(expect_rename_all(b, "u", kern), "v", kern);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("genfun of a code matches its joint spectrum") {
    Rng rng(6);
    for (std::uint32_t q : {2u, 3u})
        for (int i = 0; i < 8; ++i) {
            const FieldMatrix a = FieldMatrix::random(gf(q), 1 + rng.below(3), 1 + rng.below(3), rng);
            const RationalPoly g = genfun_of_code(LinearCode(a));
            const auto j = oracle::joint(a);
            CHECK(g.num_terms() == j.size());
            for (const auto& [key, mass] : j) {
                std::map<Var, std::uint32_t> mono;
                for (Symbol s = 0; s < q; ++s) {
                    if (key.first[s]) mono[Var{"u", 0, s}] = key.first[s];
                    if (key.second[s]) mono[Var{"v", 0, s}] = key.second[s];
                }
                CHECK(g.coef(mono) == mass);
            }
        }
}

TEST_CASE("coefficients") {
    const RationalPoly g = (u(0) * u(0) + u(1) * u(1)) * r(1, 2);
    CHECK(g.coef(std::map<Var, std::uint32_t>{{Var{"u", 0, 0}, 2}}) == r(1, 2));
    CHECK(g.coef(std::map<Var, std::uint32_t>{{Var{"u", 0, 2}, 1}}) == 0);
    CHECK(fx::error_kind([&] {
              RationalPoly p = g;
              p.add_term({1}, r(1));
          }) == ErrorKind::DimensionMismatch);
}
