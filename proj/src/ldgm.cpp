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

#include "lscc/ldgm.hpp"

#include <map>
#include <numeric>

#include "lscc/error.hpp"

namespace lscc {

RationalPoly rep_genfun(std::uint32_t q, std::uint32_t c) {
    if (c < 1) throw Error(ErrorKind::DomainError, "repetition degree must be >= 1");
    auto vars = block_vars("u", 0, q);
    auto v = block_vars("v", 0, q);
    vars.insert(vars.end(), v.begin(), v.end());
    RationalPoly p(vars);
    for (Symbol a = 0; a < q; ++a) {
        Exponent e(2 * q, 0);
        e[a] = 1;
        e[q + a] = c;
        p.add_term(e, Rational(1, q));
    }
    return p;
}

RationalPoly rrep_genfun(const Field& field, std::uint32_t c) {
    const auto k = multiplier_kernel(field);
    return expect_rename(expect_rename(rep_genfun(field.q(), c), "u", 0, k), "v", 0, k);
}

TypeVector stretch(const TypeVector& p, std::uint32_t c) {
    TypeVector t = p;
    for (auto& x : t.counts) x *= c;
    return t;
}

JointSpectrum rep_joint_spectrum(const Field& field, std::uint32_t c, std::uint32_t n, std::uint64_t limit) {
    const Spectrum s = space_spectrum(n, field, limit);
    JointSpectrum j{field.q(), n, n * c, {}};
    for (const auto& [p, mass] : s.entries) j.entries.emplace(std::make_pair(p, stretch(p, c)), mass);
    return j;
}

RationalPoly chk_avg_genfun(std::uint32_t q, std::uint32_t d, std::uint32_t n) {
    if (d < 1 || n < 1) throw Error(ErrorKind::DomainError, "d and n must be >= 1");
    RationalPoly su, sv;
    for (Symbol a = 0; a < q; ++a) {
        su += RationalPoly::variable(Var{"u", 0, a});
        sv += RationalPoly::variable(Var{"v", 0, a});
    }
    const RationalPoly u0 = RationalPoly::variable(Var{"u", 0, 0});
    const RationalPoly v0 = RationalPoly::variable(Var{"v", 0, 0});
    const RationalPoly l = (u0 * Rational(q) - su) * Rational(1, q - 1);
    RationalPoly single = su.pow(d) * sv + l.pow(d) * (v0 * Rational(q) - sv);
    single *= make_rational(1, ipow(q, d + 1));
    return single.pow(n);
}

namespace {

// Homogeneous polynomial in (x0, s), stored by power of s.
using Homog = std::vector<Rational>;

Homog hmul(const Homog& a, const Homog& b) {
    Homog r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Homog hpow(Homog base, std::uint64_t e) {
    Homog r{Rational(1)};
    while (e) {
        if (e & 1) r = hmul(r, base);
        e >>= 1;
        if (e) base = hmul(base, base);
    }
    return r;
}

// (x0 + a s)^d
Homog linear_power(const Rational& a, std::uint32_t d) {
    Homog r(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) r[k] = Rational(binomial(d, k)) * rpow(a, k);
    return r;
}

void check_type(const TypeVector& t, std::uint32_t q, std::uint32_t n, const char* what) {
    if (t.q() != q || t.n() != n)
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " type has the wrong alphabet or length");
}

}  // namespace

Rational chk_avg_spectrum(std::uint32_t q, std::uint32_t d, std::uint32_t n, const TypeVector& p, const TypeVector& q_type) {
    check_type(p, q, d * n, "input");
    check_type(q_type, q, n, "output");
    // With x0 = u_0 and s = sum_{a != 0} u_a: sum u = x0 + s, (q u_0 - sum u)/(q - 1) = x0 - s/(q - 1).
    const Homog plus = linear_power(Rational(1), d);
    const Homog minus = linear_power(Rational(-1, q - 1), d);
    Homog a(d + 1), b(d + 1);
    for (std::uint32_t k = 0; k <= d; ++k) {
        a[k] = plus[k] + Rational(q - 1) * minus[k];
        b[k] = plus[k] - minus[k];
    }
    const std::uint32_t zeros = q_type[0];
    const Homog g = hmul(hpow(a, zeros), hpow(b, n - zeros));
    const std::uint32_t s_power = d * n - p[0];
    // Distribute s^K over the nonzero symbols.
    std::vector<std::uint32_t> rest(p.counts.begin() + 1, p.counts.end());
    Rational coef = g[s_power] * Rational(multinomial(rest));
    coef *= Rational(multinomial(q_type.counts));
    coef /= Rational(ipow(q, static_cast<std::uint64_t>(n) * (d + 1)));
    coef.canonicalize();
    return coef;
}

Rational g2_bound(std::uint32_t q, std::uint32_t d, std::uint32_t n, const TypeVector& o, const TypeVector& p,
                  const TypeVector& q_type) {
    check_type(o, q, d * n, "O");
    check_type(p, q, d * n, "input");
    check_type(q_type, q, n, "output");
    Rational denom = 1;
    for (Symbol a = 0; a < q; ++a) {
        if (p[a] == 0) continue;
        if (o[a] == 0) throw Error(ErrorKind::SupportViolation, "O(a) = 0 where P(a) > 0");
        denom *= rpow(o.prob(a), p[a]);
    }
    const Rational t = rpow((Rational(q) * o.prob(0) - 1) / Rational(q - 1), d);
    Rational v = Rational(multinomial(q_type.counts)) / Rational(ipow(q, static_cast<std::uint64_t>(n) * (d + 1)));
    v *= rpow(Rational(1) + Rational(q - 1) * t, q_type[0]);
    v *= rpow(Rational(1) - t, n - q_type[0]);
    v /= denom;
    v.canonicalize();
    return v;
}

LdgmParams LdgmParams::make(const Field& field, std::uint32_t c, std::uint32_t d, std::uint32_t n) {
    if (c < 1 || d < 1 || n < 1) throw Error(ErrorKind::DomainError, "c, d and n must be >= 1");
    LdgmParams p;
    p.field = field;
    p.c = c;
    p.d = d;
    p.n = n;
    const std::uint32_t g = std::gcd(c, d);
    p.c_prime = c / g;
    p.d_prime = d / g;
    return p;
}

FieldMatrix LdgmSample::generator() const {
    FieldMatrix g(params.field, params.input_length(), params.output_length());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [col, coef] : rows[i]) g(i, col) = coef;
    return g;
}

LdgmSample ldgm_build(const LdgmParams& params, std::vector<std::size_t> permutation, std::vector<Symbol> multipliers) {
    const std::uint32_t edges = params.edge_count();
    if (permutation.size() != edges || multipliers.size() != edges)
        throw Error(ErrorKind::DimensionMismatch, "permutation and multipliers must cover c d' n positions");
    const Field& f = params.field;
    LdgmSample s;
    s.params = params;
    s.permutation = std::move(permutation);
    s.multipliers = std::move(multipliers);
    std::vector<std::map<std::size_t, Symbol>> acc(params.input_length());
    for (std::uint32_t k = 0; k < edges; ++k) {
        LdgmEdge e;
        e.input = k / params.c;
        e.slot = k % params.c;
        e.position = static_cast<std::uint32_t>(s.permutation[k]);
        e.check = e.position / params.d;
        e.multiplier = s.multipliers[e.position];
        if (e.multiplier == 0 || e.multiplier >= f.q()) throw Error(ErrorKind::DomainError, "multipliers must be nonzero");
        s.edges.push_back(e);
        auto& cell = acc[e.input][e.check];
        cell = f.add(cell, e.multiplier);
    }
    s.rows.resize(params.input_length());
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (const auto& [col, coef] : acc[i])
            if (coef != 0) s.rows[i].emplace_back(col, coef);
    return s;
}

LdgmSample ldgm_sample(const LdgmParams& params, Rng& rng) {
    const std::uint32_t edges = params.edge_count();
    auto perm = rng.permutation(edges);
    std::vector<Symbol> mult(edges);
    for (auto& m : mult) m = static_cast<Symbol>(1 + rng.below(params.field.q() - 1));
    return ldgm_build(params, std::move(perm), std::move(mult));
}

LdgmSample ldgm_sample(const LdgmParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return ldgm_sample(params, rng);
}

CodeEnsemble ldgm_ensemble_exact(const LdgmParams& params, const Limits& limits) {
    const std::uint32_t edges = params.edge_count();
    if (edges > limits.max_permutation_length)
        throw Error(ErrorKind::TooLarge, "exact LDGM enumeration needs c d' n <= " +
                                             std::to_string(limits.max_permutation_length));
    const std::uint32_t q = params.field.q();
    const std::uint64_t patterns = checked_power(q - 1, edges, limits.max_support);
    std::uint64_t perms = 1;
    for (std::uint32_t i = 2; i <= edges; ++i) perms *= i;
    if (BigInt(static_cast<unsigned long>(perms)) * patterns > BigInt(static_cast<unsigned long>(limits.max_support)))
        throw Error(ErrorKind::TooLarge, "LDGM permutation x multiplier space exceeds the support cap");
    const Rational w = make_rational(1, BigInt(static_cast<unsigned long>(perms)) * patterns);
    std::vector<WeightedCode> support;
    for_each_permutation(edges, [&](const std::vector<std::size_t>& perm) {
        for (std::uint64_t idx = 0; idx < patterns; ++idx) {
            Vector mult = vector_from_index(q - 1, edges, idx);
            for (auto& m : mult) m += 1;
            support.push_back({LinearCode(ldgm_build(params, perm, mult).generator()), w});
        }
    });
    return CodeEnsemble::from_support(std::move(support));
}

CodeEnsemble ldgm_ensemble(const LdgmParams& params, const Limits& limits) {
    CodeEnsemble::Sampler sampler = [params](Rng& rng) { return LinearCode(ldgm_sample(params, rng).generator()); };
    CodeEnsemble::Enumerator enumerator;
    if (params.edge_count() <= limits.max_permutation_length)
        enumerator = [params, limits]() { return ldgm_ensemble_exact(params, limits).exact_support(); };
    return CodeEnsemble::from_sampler(params.field, params.input_length(), params.output_length(), SupportFamily::Ldgm,
                                      std::move(sampler), std::move(enumerator));
}

Rational ldgm_conditional_spectrum(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type) {
    const std::uint32_t q = params.field.q();
    check_type(p, q, params.input_length(), "input");
    check_type(q_type, q, params.output_length(), "output");
    const TypeVector cp = stretch(p, params.c);
    Rational space = make_rational(type_class_size(cp), ipow(q, params.edge_count()));
    Rational v = chk_avg_spectrum(q, params.d, params.output_length(), cp, q_type) / space;
    v.canonicalize();
    return v;
}

Rational ldgm_alpha(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type) {
    const std::uint32_t q = params.field.q();
    Rational sy = make_rational(type_class_size(q_type), ipow(q, params.output_length()));
    Rational v = ldgm_conditional_spectrum(params, p, q_type) / sy;
    v.canonicalize();
    return v;
}

double ldgm_alpha_bound(const LdgmParams& params, const TypeVector& p, const TypeVector& q_type) {
    const std::uint32_t q = params.field.q();
    const double x = to_double(p.prob(0));
    const double y = to_double(q_type.prob(0));
    return static_cast<double>(params.c) / params.d * delta_qd(q, params.d, x, y) +
           static_cast<double>(params.c) * Delta(stretch(p, params.c));
}

}  // namespace lscc
