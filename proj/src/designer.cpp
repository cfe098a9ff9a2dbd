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

#include "lscc/designer.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "lscc/error.hpp"

namespace lscc {

LinearCode compose(const LinearCode& outer, const std::vector<std::size_t>& interleaver, const LinearCode& inner) {
    if (outer.m() != interleaver.size() || inner.n() != outer.m())
        throw Error(ErrorKind::DimensionMismatch, "outer output, interleaver and inner input lengths differ");
    if (!(outer.field() == inner.field())) throw Error(ErrorKind::DimensionMismatch, "stages over different fields");
    const Field& f = outer.field();
    const FieldMatrix p = FieldMatrix::permutation(f, interleaver);
    const FieldMatrix tail = p * inner.generator();
    Vector offset = inner.offset();
    if (!outer.is_linear()) {
        Vector shifted = tail.apply(outer.offset());
        if (offset.empty()) offset.assign(inner.m(), 0);
        for (std::size_t j = 0; j < offset.size(); ++j) offset[j] = f.add(offset[j], shifted[j]);
    }
    return LinearCode(outer.generator() * tail, std::move(offset));
}

CodeEnsemble compose(const ConcatSpec& spec, const Limits& limits) {
    const std::size_t m = spec.outer.m();
    if (spec.inner.n() != m) throw Error(ErrorKind::DimensionMismatch, "outer output length differs from inner input length");
    if (spec.interleaver && spec.interleaver->size() != m)
        throw Error(ErrorKind::DimensionMismatch, "interleaver length differs from outer output length");
    const CodeEnsemble outer = spec.outer;
    const CodeEnsemble inner = spec.inner;
    const auto fixed = spec.interleaver;

    CodeEnsemble::Sampler sampler = [outer, inner, fixed, m](Rng& rng) {
        const LinearCode a = outer.sample(rng);
        const std::vector<std::size_t> perm = fixed ? *fixed : rng.permutation(m);
        return compose(a, perm, inner.sample(rng));
    };
    const bool exact = outer.has_exact_support() && inner.has_exact_support() &&
                       (fixed || m <= limits.max_permutation_length);
    if (!exact)
        return CodeEnsemble::from_sampler(outer.field(), outer.n(), inner.m(), SupportFamily::Custom, std::move(sampler));

    const auto so = outer.exact_support();
    const auto si = inner.exact_support();
    std::vector<std::vector<std::size_t>> perms;
    if (fixed)
        perms.push_back(*fixed);
    else
        for_each_permutation(m, [&](const std::vector<std::size_t>& p) { perms.push_back(p); });
    const BigInt total = BigInt(static_cast<unsigned long>(so.size())) * si.size() * perms.size();
    if (total > BigInt(static_cast<unsigned long>(limits.max_support)))
        throw Error(ErrorKind::SupportExplosion, "composed support exceeds the cap");
    const Rational pw(1, perms.size());
    std::map<LinearCode, Rational> merged;
    for (const auto& a : so)
        for (const auto& perm : perms)
            for (const auto& b : si) merged[compose(a.code, perm, b.code)] += a.prob * b.prob * pw;
    std::vector<WeightedCode> support;
    for (auto& [code, prob] : merged) support.push_back({code, prob});
    return CodeEnsemble::from_support(std::move(support));
}

WindowReport outer_weight_window(const LinearCode& f, const Limits& limits) {
    const std::uint32_t q = f.field().q();
    const FieldMatrix basis = f.generator().rref();
    const std::uint64_t count = checked_power(q, basis.rows(), limits.max_domain);
    WindowReport r;
    r.injective = basis.rows() == f.n() && f.is_linear();
    bool first = true;
    auto consider = [&](const Vector& y) {
        const Rational p0 = make_rational(type_of(y, q)[0], y.size());
        if (first || p0 < r.p0_min) r.p0_min = p0;
        if (first || p0 > r.p0_max) r.p0_max = p0;
        first = false;
        ++r.codewords;
    };
    for (std::uint64_t i = 1; i < count; ++i) {
        Vector y = basis.apply(vector_from_index(q, basis.rows(), i));
        for (std::size_t j = 0; j < f.offset().size(); ++j) y[j] = f.field().add(y[j], f.offset()[j]);
        consider(y);
    }
    // A nontrivial kernel sends some nonzero input to the zero codeword.
    if (basis.rows() < f.n()) consider(f.is_linear() ? Vector(f.m(), 0) : f.offset());
    if (first) throw Error(ErrorKind::EmptySet, "code has no nonzero inputs");
    r.window.gamma1 = Rational(1, q) - r.p0_min;
    r.window.gamma2 = r.p0_max - Rational(1, q);
    r.window.gamma1.canonicalize();
    r.window.gamma2.canonicalize();
    return r;
}

DesignResult design_concat(const DesignInput& in) {
    if (sgn(in.outer_rate) <= 0) throw Error(ErrorKind::DomainError, "outer rate must be positive");
    if (sgn(in.inner_rate) <= 0) throw Error(ErrorKind::DomainError, "inner rate must be positive");
    if (in.p0_min > in.p0_max) throw Error(ErrorKind::DomainError, "empty weight window");
    DesignResult r;
    r.input = in;
    const Rational inv_q(1, in.q);
    r.gamma1 = to_double(inv_q - in.p0_min);
    r.gamma2 = to_double(in.p0_max - inv_q);
    const double rf = to_double(in.outer_rate);
    const double r0 = to_double(in.inner_rate);
    r.inner_delta = in.delta * rf;
    const Rho0Result dq = rho0_and_dq(in.q, r0, r.gamma1, r.gamma2, r.inner_delta);
    r.gamma = dq.gamma;
    r.d_min = dq.d_min;
    // r0 = d / c in lowest terms a / b: d must be a multiple of a.
    const BigInt a = in.inner_rate.get_num();
    const BigInt b = in.inner_rate.get_den();
    if (!a.fits_ulong_p() || !b.fits_ulong_p()) throw Error(ErrorKind::DomainError, "inner rate too large");
    const unsigned long an = a.get_ui(), bn = b.get_ui();
    const unsigned long mult = (r.d_min + an - 1) / an;
    r.d = static_cast<std::uint32_t>(mult * an);
    r.c = static_cast<std::uint32_t>(mult * bn);
    r.rho0 = rho0(in.q, r0, r.gamma, r.d);
    r.final_bound = r.rho0 / rf;
    r.certified = r.rho0 <= r.inner_delta && r.final_bound <= in.delta;
    return r;
}

namespace {

CodeEnsemble equivalence(const CodeEnsemble& f, EquivalenceMode mode, const Limits& limits) {
    const std::size_t side = mode == EquivalenceMode::G1 ? f.m() : f.n();
    const CodeEnsemble phi = CodeEnsemble::uniform_all_matrices(f.field(), side, side, limits);
    auto combine = [mode](const LinearCode& a, const LinearCode& p) {
        if (!a.is_linear()) throw Error(ErrorKind::DomainError, "equivalence constructions need linear codes");
        return LinearCode(mode == EquivalenceMode::G1 ? a.generator() * p.generator() : p.generator() * a.generator());
    };
    CodeEnsemble::Sampler sampler = [f, phi, combine](Rng& rng) {
        const LinearCode a = f.sample(rng);
        return combine(a, phi.sample(rng));
    };
    CodeEnsemble::Enumerator enumerator;
    if (f.has_exact_support() && phi.has_exact_support())
        enumerator = [f, phi, combine, limits]() {
            const auto sf = f.exact_support();
            const auto sp = phi.exact_support();
            if (BigInt(static_cast<unsigned long>(sf.size())) * sp.size() > BigInt(static_cast<unsigned long>(limits.max_support)))
                throw Error(ErrorKind::TooLarge, "equivalence support exceeds the cap");
            std::vector<WeightedCode> out;
            for (const auto& a : sf)
                for (const auto& p : sp) out.push_back({combine(a.code, p.code), a.prob * p.prob});
            return out;
        };
    return CodeEnsemble::from_sampler(f.field(), f.n(), f.m(), SupportFamily::Custom, std::move(sampler),
                                      std::move(enumerator));
}

// ker(A Phi) = ker A and image(Phi A) = image A both reduce to rank preservation.
bool preserved(const FieldMatrix& a, const FieldMatrix& phi, EquivalenceMode mode) {
    const FieldMatrix g = mode == EquivalenceMode::G1 ? a * phi : phi * a;
    return g.rank() == a.rank();
}

}  // namespace

CodeEnsemble equivalence_G1(const CodeEnsemble& f, const Limits& limits) { return equivalence(f, EquivalenceMode::G1, limits); }
CodeEnsemble equivalence_G2(const CodeEnsemble& f, const Limits& limits) { return equivalence(f, EquivalenceMode::G2, limits); }

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.96;
    const double n = static_cast<double>(trials);
    const double p = successes / n;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

EquivalenceReport verify_equivalence(const CodeEnsemble& f, EquivalenceMode mode, bool exact, std::uint64_t samples,
                                     std::uint64_t seed, const Limits& limits) {
    EquivalenceReport r;
    r.mode = mode;
    r.exact = exact;
    r.kq = kq_product(f.field().q(), 200).get_d();
    const std::size_t side = mode == EquivalenceMode::G1 ? f.m() : f.n();
    if (exact) {
        const auto sf = f.exact_support();
        const std::uint64_t count = checked_power(f.field().q(), side * side, limits.max_support);
        r.probability = 0;
        for (const auto& w : sf) {
            if (!w.code.is_linear()) throw Error(ErrorKind::DomainError, "equivalence constructions need linear codes");
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < count; ++i)
                if (preserved(w.code.generator(), FieldMatrix::from_index(f.field(), side, side, i), mode)) ++hits;
            r.probability += w.prob * make_rational(hits, count);
        }
        r.probability.canonicalize();
        r.estimate = to_double(r.probability);
        r.ci_low = r.ci_high = r.estimate;
        r.samples = count;
        r.above_kq = r.estimate > r.kq;
        return r;
    }
    Rng rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const LinearCode a = f.sample(rng);
        if (preserved(a.generator(), FieldMatrix::random(f.field(), side, side, rng), mode)) ++hits;
    }
    r.samples = samples;
    r.estimate = samples ? static_cast<double>(hits) / samples : 0;
    std::tie(r.ci_low, r.ci_high) = wilson_interval(hits, samples);
    r.above_kq = r.ci_high > r.kq;
    return r;
}

Rational single_code_lower_bound(std::uint32_t alphabet_size, std::uint32_t m) {
    if (alphabet_size < 2 || m < 1) throw Error(ErrorKind::DomainError, "need |Y| >= 2 and m >= 1");
    std::vector<std::uint32_t> counts(alphabet_size, m / alphabet_size);
    for (std::uint32_t i = 0; i < m % alphabet_size; ++i) ++counts[i];
    return make_rational(ipow(alphabet_size, m), multinomial(counts));
}

Rational max_alpha(const LinearCode& f, const Limits& limits) {
    const JointSpectrum j = code_joint_spectrum(f, limits);
    Rational best = 0;
    for (const auto& [key, mass] : j.entries) {
        if (key.first.is_zero_type()) continue;
        const Rational a = alpha(j, key.first, key.second);
        if (a > best) best = a;
    }
    return best;
}

LowerBoundCheck check_lower_bound(const LinearCode& f, const Limits& limits) {
    LowerBoundCheck c;
    c.bound = single_code_lower_bound(f.field().q(), static_cast<std::uint32_t>(f.m()));
    c.max_alpha = max_alpha(f, limits);
    c.respected = c.max_alpha >= c.bound;
    return c;
}

}  // namespace lscc
