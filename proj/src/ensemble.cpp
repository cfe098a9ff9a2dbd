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

#include "lscc/ensemble.hpp"

#include <map>
#include <utility>

#include "lscc/error.hpp"

namespace lscc {

std::string_view to_string(SupportFamily family) {
    switch (family) {
        case SupportFamily::Explicit: return "explicit";
        case SupportFamily::AllMatrices: return "all-matrices";
        case SupportFamily::Gabidulin: return "gabidulin";
        case SupportFamily::Ldgm: return "ldgm";
        case SupportFamily::Custom: return "custom";
    }
    return "unknown";
}

std::vector<WeightedCode> merge_support(std::vector<WeightedCode> support) {
    std::map<LinearCode, Rational> merged;
    for (auto& w : support) merged[std::move(w.code)] += w.prob;
    std::vector<WeightedCode> out;
    out.reserve(merged.size());
    for (auto& [code, prob] : merged)
        if (!is_zero(prob)) out.push_back({code, prob});
    return out;
}

CodeEnsemble CodeEnsemble::from_support(std::vector<WeightedCode> support) {
    if (support.empty()) throw Error(ErrorKind::EmptySet, "ensemble support is empty");
    CodeEnsemble e;
    e.field_ = support.front().code.field();
    e.n_ = support.front().code.n();
    e.m_ = support.front().code.m();
    Rational total = 0;
    for (const auto& w : support) {
        if (w.code.n() != e.n_ || w.code.m() != e.m_ || !(w.code.field() == e.field_))
            throw Error(ErrorKind::DimensionMismatch, "ensemble members must share (n, m, field)");
        if (sgn(w.prob) < 0) throw Error(ErrorKind::InvalidProbability, "negative probability");
        total += w.prob;
    }
    if (total != 1) throw Error(ErrorKind::InvalidProbability, "probabilities sum to " + to_string(total));
    e.support_ = merge_support(std::move(support));
    double acc = 0;
    for (const auto& w : e.support_) {
        acc += to_double(w.prob);
        e.cumulative_.push_back(acc);
    }
    return e;
}

CodeEnsemble CodeEnsemble::single(LinearCode code) { return from_support({{std::move(code), Rational(1)}}); }

CodeEnsemble CodeEnsemble::uniform(const std::vector<LinearCode>& codes) {
    if (codes.empty()) throw Error(ErrorKind::EmptySet, "no codes given");
    std::vector<WeightedCode> s;
    const Rational p(1, codes.size());
    for (const auto& c : codes) s.push_back({c, p});
    return from_support(std::move(s));
}

CodeEnsemble CodeEnsemble::from_sampler(Field field, std::size_t n, std::size_t m, SupportFamily family,
                                        Sampler sampler, Enumerator enumerator) {
    CodeEnsemble e;
    e.field_ = std::move(field);
    e.n_ = n;
    e.m_ = m;
    e.family_ = family;
    e.sampler_ = std::move(sampler);
    e.enumerator_ = std::move(enumerator);
    return e;
}

CodeEnsemble CodeEnsemble::uniform_all_matrices(Field field, std::size_t n, std::size_t m, const Limits& limits) {
    Sampler sampler = [field, n, m](Rng& rng) { return LinearCode(FieldMatrix::random(field, n, m, rng)); };
    Enumerator enumerator;
    std::uint64_t count = 0;
    try {
        count = checked_power(field.q(), n * m, limits.max_support);
    } catch (const Error&) {
        count = 0;
    }
    if (count > 0) {
        enumerator = [field, n, m, count]() {
            std::vector<WeightedCode> s;
            s.reserve(count);
            const Rational p(1, count);
            for (std::uint64_t i = 0; i < count; ++i) s.push_back({LinearCode(FieldMatrix::from_index(field, n, m, i)), p});
            return s;
        };
    }
    return from_sampler(std::move(field), n, m, SupportFamily::AllMatrices, std::move(sampler), std::move(enumerator));
}

std::vector<WeightedCode> CodeEnsemble::exact_support() const {
    if (!support_.empty()) return support_;
    if (enumerator_) return merge_support(enumerator_());
    throw Error(ErrorKind::UnsupportedSampler,
                "ensemble of family '" + std::string(to_string(family_)) + "' has no enumerable support");
}

LinearCode CodeEnsemble::sample(Rng& rng) const {
    if (sampler_) return sampler_(rng);
    const double u = rng.unit() * cumulative_.back();
    for (std::size_t i = 0; i < cumulative_.size(); ++i)
        if (u < cumulative_[i]) return support_[i].code;
    return support_.back().code;
}

namespace {

std::uint64_t factorial_u64(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

LinearCode apply_mode(const LinearCode& code, const std::vector<std::size_t>* in_perm,
                      const std::vector<std::size_t>* out_perm, const Vector* offset) {
    const Field& f = code.field();
    FieldMatrix g = code.generator();
    Vector off = code.offset();
    if (in_perm) g = FieldMatrix::permutation(f, *in_perm) * g;
    if (out_perm) {
        const FieldMatrix p = FieldMatrix::permutation(f, *out_perm);
        g = g * p;
        if (!off.empty()) off = permute(off, *out_perm);
    }
    if (offset) {
        if (off.empty()) off.assign(code.m(), 0);
        for (std::size_t j = 0; j < off.size(); ++j) off[j] = f.add(off[j], (*offset)[j]);
    }
    return LinearCode(std::move(g), std::move(off));
}

}  // namespace

CodeEnsemble randomize(const CodeEnsemble& ensemble, RandomizeMode mode, const Limits& limits) {
    const bool use_in = mode != RandomizeMode::Out;
    const bool use_out = mode != RandomizeMode::In;
    const bool use_offset = mode == RandomizeMode::Affine;
    const std::size_t n = ensemble.n();
    const std::size_t m = ensemble.m();
    const Field field = ensemble.field();

    CodeEnsemble::Sampler sampler = [ensemble, use_in, use_out, use_offset, n, m](Rng& rng) {
        const LinearCode base = ensemble.sample(rng);
        std::vector<std::size_t> pin, pout;
        Vector off;
        if (use_in) pin = rng.permutation(n);
        if (use_out) pout = rng.permutation(m);
        if (use_offset) {
            off.resize(m);
            for (auto& s : off) s = static_cast<Symbol>(rng.below(base.field().q()));
        }
        return apply_mode(base, use_in ? &pin : nullptr, use_out ? &pout : nullptr, use_offset ? &off : nullptr);
    };

    if (!ensemble.has_exact_support())
        return CodeEnsemble::from_sampler(field, n, m, ensemble.family(), std::move(sampler));

    if ((use_in && n > limits.max_permutation_length) || (use_out && m > limits.max_permutation_length))
        throw Error(ErrorKind::SupportExplosion, "permutation expansion beyond length " +
                                                     std::to_string(limits.max_permutation_length));
    const std::vector<WeightedCode> base = ensemble.exact_support();
    const std::uint64_t fin = use_in ? factorial_u64(n) : 1;
    const std::uint64_t fout = use_out ? factorial_u64(m) : 1;
    const std::uint64_t offsets = use_offset ? checked_power(field.q(), m, limits.max_support) : 1;
    const BigInt raw = BigInt(base.size()) * fin * fout * offsets;
    if (raw > BigInt(std::to_string(limits.max_support)))
        throw Error(ErrorKind::SupportExplosion, "randomized support of size " + to_string(raw) + " exceeds limit");

    const Rational scale(1, BigInt(fin) * fout * offsets);
    std::map<LinearCode, Rational> merged;
    std::vector<std::vector<std::size_t>> in_perms, out_perms;
    if (use_in) for_each_permutation(n, [&](const auto& p) { in_perms.push_back(p); });
    if (use_out) for_each_permutation(m, [&](const auto& p) { out_perms.push_back(p); });
    for (const auto& w : base) {
        const Rational p = w.prob * scale;
        const std::size_t ni = use_in ? in_perms.size() : 1;
        const std::size_t no = use_out ? out_perms.size() : 1;
        for (std::size_t a = 0; a < ni; ++a)
            for (std::size_t b = 0; b < no; ++b)
                for (std::uint64_t o = 0; o < offsets; ++o) {
                    Vector off = use_offset ? vector_from_index(field.q(), m, o) : Vector{};
                    merged[apply_mode(w.code, use_in ? &in_perms[a] : nullptr, use_out ? &out_perms[b] : nullptr,
                                      use_offset ? &off : nullptr)] += p;
                }
    }
    std::vector<WeightedCode> support;
    support.reserve(merged.size());
    for (auto& [code, prob] : merged) support.push_back({code, prob});
    return CodeEnsemble::from_support(std::move(support));
}

}  // namespace lscc
