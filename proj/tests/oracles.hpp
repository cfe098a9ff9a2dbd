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


// Brute-force reference computations for the unit and acceptance tests.
// Everything here enumerates directly and shares no code paths with the
// closed forms under test beyond raw field arithmetic.

#ifndef LSCC_TESTS_ORACLES_HPP
#define LSCC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "lscc/genfun.hpp"
#include "lscc/gf.hpp"
#include "lscc/matrix.hpp"
#include "lscc/rational.hpp"

namespace oracle {

using lscc::BigInt;
using lscc::Field;
using lscc::FieldMatrix;
using lscc::Rational;
using lscc::Symbol;
using Counts = std::vector<std::uint32_t>;
using Vec = std::vector<Symbol>;

/// Schoolbook product in GF(p)[x] reduced by the monic modulus.
inline Symbol slow_mul(std::uint32_t p, const std::vector<std::uint32_t>& modulus, Symbol a, Symbol b) {
    const std::size_t r = modulus.size() - 1;
    std::vector<std::uint32_t> da(r), db(r), prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i, a /= p, b /= p) {
        da[i] = a % p;
        db[i] = b % p;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (std::size_t k = 2 * r - 1; k >= r; --k) {
        const std::uint32_t c = prod[k];
        if (!c) continue;
        for (std::size_t j = 0; j <= r; ++j) prod[k - r + j] = (prod[k - r + j] + p * p - c * modulus[j] % p) % p;
    }
    Symbol out = 0;
    for (std::size_t i = r; i-- > 0;) out = out * p + prod[i];
    return out;
}

inline Symbol slow_add(std::uint32_t p, std::uint32_t r, Symbol a, Symbol b) {
    Symbol out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r; ++i, a /= p, b /= p, scale *= p) out += ((a % p + b % p) % p) * scale;
    return out;
}

/// All length-n words over [0, q), first coordinate varying fastest.
inline std::vector<Vec> all_words(std::uint32_t q, std::size_t n) {
    std::vector<Vec> out;
    Vec w(n, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = 0;
        while (i < n && ++w[i] == q) w[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline Counts counts_of(const Vec& w, std::uint32_t q) {
    Counts c(q, 0);
    for (auto s : w) ++c[s];
    return c;
}

inline Vec times(const Field& f, const Vec& x, const FieldMatrix& a) {
    Vec y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[j] = f.add(y[j], f.mul(x[i], a(i, j)));
    return y;
}

inline Symbol dot(const Field& f, const Vec& x, const Vec& y) {
    Symbol s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

/// Rank from the image size, without elimination.
inline std::size_t rank_by_image(const FieldMatrix& a) {
    std::set<Vec> image;
    for (const auto& x : all_words(a.field().q(), a.rows())) image.insert(times(a.field(), x, a));
    std::size_t r = 0;
    for (std::size_t s = image.size(); s > 1; s /= a.field().q()) ++r;
    return r;
}

inline std::map<Counts, Rational> spectrum(const std::vector<Vec>& set, std::uint32_t q) {
    std::map<Counts, Rational> s;
    const Rational w(1, set.size());
    for (const auto& x : set) s[counts_of(x, q)] += w;
    return s;
}

inline std::map<std::pair<Counts, Counts>, Rational> joint(const FieldMatrix& a) {
    const std::uint32_t q = a.field().q();
    const auto words = all_words(q, a.rows());
    std::map<std::pair<Counts, Counts>, Rational> s;
    const Rational w(1, words.size());
    for (const auto& x : words) s[{counts_of(x, q), counts_of(times(a.field(), x, a), q)}] += w;
    return s;
}

/// Members of the row space of a, by enumeration of all combinations.
inline std::vector<Vec> span(const FieldMatrix& a) {
    std::set<Vec> s;
    for (const auto& x : all_words(a.field().q(), a.rows())) s.insert(times(a.field(), x, a));
    return {s.begin(), s.end()};
}

/// {y : y . g = 0 for each generator row g}.
inline std::vector<Vec> dual(const FieldMatrix& gens, std::size_t n) {
    const Field& f = gens.field();
    std::vector<Vec> out;
    for (const auto& y : all_words(f.q(), n)) {
        bool ok = true;
        for (std::size_t i = 0; i < gens.rows() && ok; ++i) {
            Vec g(n);
            for (std::size_t j = 0; j < n; ++j) g[j] = gens(i, j);
            ok = dot(f, y, g) == 0;
        }
        if (ok) out.push_back(y);
    }
    return out;
}

/// Genfun of a set over a partition, built from per-block counts.
inline std::map<std::vector<Counts>, Rational> u_spectrum(const std::vector<Vec>& set, std::uint32_t q,
                                                          const std::vector<std::vector<std::size_t>>& blocks) {
    std::map<std::vector<Counts>, Rational> s;
    const Rational w(1, set.size());
    for (const auto& x : set) {
        std::vector<Counts> key;
        for (const auto& b : blocks) {
            Counts c(q, 0);
            for (auto i : b) ++c[x[i]];
            key.push_back(c);
        }
        s[key] += w;
    }
    return s;
}

/// True when p has exactly the terms of the U-spectrum in family "u".
inline bool genfun_matches(const lscc::RationalPoly& p, const std::map<std::vector<Counts>, Rational>& s) {
    if (p.num_terms() != s.size()) return false;
    for (const auto& [key, mass] : s) {
        std::map<lscc::Var, std::uint32_t> mono;
        for (std::size_t b = 0; b < key.size(); ++b)
            for (std::uint32_t a = 0; a < key[b].size(); ++a)
                if (key[b][a]) mono[lscc::Var{"u", static_cast<std::uint32_t>(b), a}] = key[b][a];
        if (p.coef(mono) != mass) return false;
    }
    return true;
}

inline std::map<Counts, Rational> space(std::uint32_t q, std::size_t n) { return spectrum(all_words(q, n), q); }

/// E over the support of S_XY(F)(P, Q), by enumerating every code and input.
inline std::map<std::pair<Counts, Counts>, Rational> avg_joint(const std::vector<std::pair<FieldMatrix, Rational>>& support) {
    std::map<std::pair<Counts, Counts>, Rational> avg;
    for (const auto& [a, prob] : support)
        for (const auto& [k, v] : joint(a)) avg[k] += prob * v;
    return avg;
}

inline Rational alpha(const std::map<std::pair<Counts, Counts>, Rational>& avg, const Counts& p, const Counts& q_type,
                      std::uint32_t q, std::size_t n, std::size_t m) {
    const auto it = avg.find({p, q_type});
    if (it == avg.end()) return 0;
    Rational r = it->second / (space(q, n).at(p) * space(q, m).at(q_type));
    r.canonicalize();
    return r;
}

/// P{sigma_m(sigma_n(x) A) = y} over the support and both uniform permutations.
inline Rational symmetrized_hit(const std::vector<std::pair<FieldMatrix, Rational>>& support, const Vec& x, const Vec& y) {
    const std::size_t n = x.size(), m = y.size();
    std::vector<std::size_t> pn(n), pm(m);
    Rational total = 0;
    BigInt count = 0;
    std::iota(pn.begin(), pn.end(), 0);
    do {
        Vec xs(n);
        for (std::size_t i = 0; i < n; ++i) xs[pn[i]] = x[i];
        for (const auto& [a, prob] : support) {
            const Vec z = times(a.field(), xs, a);
            std::iota(pm.begin(), pm.end(), 0);
            Rational hits = 0;
            std::size_t perms = 0;
            do {
                Vec zs(m);
                for (std::size_t j = 0; j < m; ++j) zs[pm[j]] = z[j];
                if (zs == y) hits += 1;
                ++perms;
            } while (std::next_permutation(pm.begin(), pm.end()));
            total += prob * hits / perms;
        }
        count += 1;
    } while (std::next_permutation(pn.begin(), pn.end()));
    Rational r = total / Rational(count);
    r.canonicalize();
    return r;
}

/// E[S(rchk_{q,d,n})(P, Q)] by enumerating all inputs and multiplier patterns.
inline std::map<std::pair<Counts, Counts>, Rational> chk_average(const Field& f, std::uint32_t d, std::uint32_t n) {
    const std::uint32_t q = f.q();
    const auto inputs = all_words(q, d * n);
    const auto mults = all_words(q - 1, d * n);
    std::map<std::pair<Counts, Counts>, Rational> avg;
    const Rational w(1, inputs.size() * mults.size());
    for (const auto& mu : mults)
        for (const auto& x : inputs) {
            Vec y(n, 0);
            for (std::uint32_t k = 0; k < d * n; ++k) y[k / d] = f.add(y[k / d], f.mul(x[k], mu[k] + 1));
            avg[{counts_of(x, q), counts_of(y, q)}] += w;
        }
    return avg;
}

/// Generator of the LDGM code for a permutation and multipliers, built edge by edge.
inline FieldMatrix ldgm_generator(const Field& f, std::uint32_t c, std::uint32_t d, std::size_t inputs,
                                  const std::vector<std::size_t>& perm, const Vec& mult) {
    const std::size_t outputs = perm.size() / d;
    FieldMatrix g(f, inputs, outputs);
    std::vector<Symbol> data(inputs * outputs, 0);
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const std::size_t i = k / c, pos = perm[k], j = pos / d;
        data[i * outputs + j] = f.add(data[i * outputs + j], mult[pos]);
    }
    return FieldMatrix(f, inputs, outputs, data);
}

/// E[S(LDGM)(Q|P)] over all permutations and nonzero multiplier patterns.
inline std::map<std::pair<Counts, Counts>, Rational> ldgm_conditional(const Field& f, std::uint32_t c, std::uint32_t d,
                                                                     std::uint32_t n) {
    const std::uint32_t dp = d / std::gcd(c, d);
    const std::size_t inputs = dp * n, edges = std::size_t(c) * dp * n;
    std::vector<std::size_t> perm(edges);
    std::iota(perm.begin(), perm.end(), 0);
    const auto mults = all_words(f.q() - 1, edges);
    std::map<std::pair<Counts, Counts>, Rational> sum;
    BigInt codes = 0;
    do {
        for (const auto& mu : mults) {
            Vec m1(edges);
            for (std::size_t k = 0; k < edges; ++k) m1[k] = mu[k] + 1;
            for (const auto& [k, v] : joint(ldgm_generator(f, c, d, inputs, perm, m1))) sum[k] += v;
            codes += 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto sp = space(f.q(), inputs);
    std::map<std::pair<Counts, Counts>, Rational> cond;
    for (auto& [k, v] : sum) {
        Rational r = v / Rational(codes) / sp.at(k.first);
        r.canonicalize();
        cond[k] = r;
    }
    return cond;
}

/// max over compositions of m into k parts of the multinomial coefficient.
inline BigInt max_multinomial(std::uint32_t k, std::uint32_t m) {
    BigInt best = 0;
    std::vector<std::uint32_t> c(k, 0);
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t i, std::uint32_t left) {
        if (i + 1 == k) {
            c[i] = left;
            BigInt v = lscc::factorial(m);
            for (auto x : c) v /= lscc::factorial(x);
            if (v > best) best = v;
            return;
        }
        for (std::uint32_t x = 0; x <= left; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, m);
    return best;
}

inline double kq_partial(std::uint32_t q, std::uint32_t terms) {
    double k = 1;
    for (std::uint32_t i = 1; i <= terms; ++i) k *= 1 - std::pow(double(q), -double(i));
    return k;
}

}  // namespace oracle

#endif  // LSCC_TESTS_ORACLES_HPP
