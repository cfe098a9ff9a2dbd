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

#include "lscc/spectra.hpp"

#include <cmath>
#include <limits>

#include "lscc/error.hpp"

namespace lscc {

std::uint32_t TypeVector::n() const {
    std::uint32_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

bool TypeVector::is_zero_type() const {
    for (std::size_t a = 1; a < counts.size(); ++a)
        if (counts[a] != 0) return false;
    return true;
}

Rational TypeVector::prob(Symbol a) const { return make_rational(counts[a], n()); }

TypeVector TypeVector::zero_type(std::uint32_t q, std::uint32_t n) {
    std::vector<std::uint32_t> c(q, 0);
    c[0] = n;
    return TypeVector(std::move(c));
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)), owner_(n, SIZE_MAX) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
        for (std::size_t i : blocks_[b]) {
            if (i >= n_) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(i) + " out of range");
            if (owner_[i] != SIZE_MAX)
                throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(i) + " in two blocks");
            owner_[i] = b;
        }
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (owner_[i] == SIZE_MAX) throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(i) + " uncovered");
}

Partition Partition::trivial(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return Partition(n, {all});
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::vector<std::size_t>> b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = {i};
    return Partition(n, std::move(b));
}

Partition Partition::random(std::size_t n, Rng& rng) {
    const std::size_t k = 1 + rng.below(n);
    std::vector<std::vector<std::size_t>> raw(k);
    for (std::size_t i = 0; i < n; ++i) raw[rng.below(k)].push_back(i);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& b : raw)
        if (!b.empty()) blocks.push_back(std::move(b));
    return Partition(n, std::move(blocks));
}

bool Partition::is_refinement_of(const Partition& coarse) const {
    if (coarse.n_ != n_) return false;
    for (const auto& b : blocks_) {
        const std::size_t target = coarse.block_of(b.front());
        for (std::size_t i : b)
            if (coarse.block_of(i) != target) return false;
    }
    return true;
}

TypeVector type_of(std::span<const Symbol> seq, std::uint32_t q) {
    if (seq.empty()) throw Error(ErrorKind::EmptySequence, "type of an empty sequence");
    std::vector<std::uint32_t> c(q, 0);
    for (Symbol s : seq) {
        if (s >= q) throw Error(ErrorKind::DomainError, "symbol outside the alphabet");
        ++c[s];
    }
    return TypeVector(std::move(c));
}

UType u_type_of(std::span<const Symbol> seq, std::uint32_t q, const Partition& partition) {
    if (seq.size() != partition.n()) throw Error(ErrorKind::DimensionMismatch, "partition length mismatch");
    UType t;
    t.reserve(partition.size());
    for (const auto& b : partition.blocks()) {
        std::vector<std::uint32_t> c(q, 0);
        for (std::size_t i : b) ++c[seq[i]];
        t.emplace_back(std::move(c));
    }
    return t;
}

std::vector<TypeVector> enumerate_types(std::uint32_t n, std::uint32_t q, std::uint64_t limit) {
    if (n < 1) throw Error(ErrorKind::DomainError, "length must be >= 1");
    if (binomial(n + q - 1, q - 1) > BigInt(std::to_string(limit)))
        throw Error(ErrorKind::TooLarge, "too many types for n=" + std::to_string(n) + ", q=" + std::to_string(q));
    std::vector<TypeVector> out;
    std::vector<std::uint32_t> c(q, 0);
    // Lexicographic ascending: recurse on the leading coordinate.
    auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
        if (pos + 1 == q) {
            c[pos] = left;
            out.emplace_back(c);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            c[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

BigInt type_class_size(const TypeVector& type) { return multinomial(type.counts); }

Rational Spectrum::at(const TypeVector& type) const {
    auto it = entries.find(type);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational Spectrum::total() const {
    Rational t = 0;
    for (const auto& [k, v] : entries) t += v;
    return t;
}

Rational USpectrum::at(const UType& type) const {
    auto it = entries.find(type);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational USpectrum::total() const {
    Rational t = 0;
    for (const auto& [k, v] : entries) t += v;
    return t;
}

Rational JointSpectrum::at(const TypeVector& p, const TypeVector& q_) const {
    auto it = entries.find({p, q_});
    return it == entries.end() ? Rational(0) : it->second;
}

Rational JointSpectrum::total() const {
    Rational t = 0;
    for (const auto& [k, v] : entries) t += v;
    return t;
}

Spectrum JointSpectrum::marginal_x() const {
    Spectrum s{q, n, {}};
    for (const auto& [k, v] : entries) s.entries[k.first] += v;
    return s;
}

Spectrum JointSpectrum::marginal_y() const {
    Spectrum s{q, m, {}};
    for (const auto& [k, v] : entries) s.entries[k.second] += v;
    return s;
}

Spectrum space_spectrum(std::uint32_t n, const Field& field, std::uint64_t limit) {
    Spectrum s{field.q(), n, {}};
    const BigInt total = ipow(field.q(), n);
    for (auto& t : enumerate_types(n, field.q(), limit)) {
        Rational r(type_class_size(t), total);
        r.canonicalize();
        s.entries.emplace(std::move(t), std::move(r));
    }
    return s;
}

Spectrum set_spectrum(const std::vector<Vector>& set, const Field& field) {
    if (set.empty()) throw Error(ErrorKind::EmptySet, "spectrum of an empty set");
    const std::size_t n = set.front().size();
    Spectrum s{field.q(), static_cast<std::uint32_t>(n), {}};
    std::map<TypeVector, std::uint64_t> counts;
    for (const auto& x : set) {
        if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "set members differ in length");
        ++counts[type_of(x, field.q())];
    }
    for (auto& [t, c] : counts) s.entries.emplace(t, make_rational(c, set.size()));
    return s;
}

USpectrum u_set_spectrum(const std::vector<Vector>& set, const Field& field, const Partition& partition) {
    if (set.empty()) throw Error(ErrorKind::EmptySet, "spectrum of an empty set");
    USpectrum s{field.q(), partition, {}};
    std::map<UType, std::uint64_t> counts;
    for (const auto& x : set) ++counts[u_type_of(x, field.q(), partition)];
    for (auto& [t, c] : counts) s.entries.emplace(t, make_rational(c, set.size()));
    return s;
}

JointSpectrum relation_spectrum(const std::vector<std::pair<Vector, Vector>>& relation, const Field& field) {
    if (relation.empty()) throw Error(ErrorKind::EmptySet, "spectrum of an empty relation");
    JointSpectrum s{field.q(), static_cast<std::uint32_t>(relation.front().first.size()),
                    static_cast<std::uint32_t>(relation.front().second.size()), {}};
    std::map<std::pair<TypeVector, TypeVector>, std::uint64_t> counts;
    for (const auto& [x, y] : relation) {
        if (x.size() != s.n || y.size() != s.m) throw Error(ErrorKind::DimensionMismatch, "relation members differ");
        ++counts[{type_of(x, s.q), type_of(y, s.q)}];
    }
    for (auto& [t, c] : counts) s.entries.emplace(t, make_rational(c, relation.size()));
    return s;
}

JointSpectrum code_joint_spectrum(const LinearCode& code, const Limits& limits) {
    const std::uint32_t q = code.field().q();
    const std::uint64_t count = checked_power(q, code.n(), limits.max_domain);
    JointSpectrum s{q, static_cast<std::uint32_t>(code.n()), static_cast<std::uint32_t>(code.m()), {}};
    std::map<std::pair<TypeVector, TypeVector>, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < count; ++i) {
        const Vector x = vector_from_index(q, code.n(), i);
        ++counts[{type_of(x, q), type_of(code.encode(x), q)}];
    }
    for (auto& [t, c] : counts) s.entries.emplace(t, make_rational(c, count));
    return s;
}

namespace {

std::vector<Vector> span_of(const FieldMatrix& basis, std::size_t n, const Limits& limits) {
    const Field& f = basis.field();
    const std::uint64_t count = checked_power(f.q(), basis.rows(), limits.max_domain);
    std::vector<Vector> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (basis.rows() == 0) {
            out.emplace_back(n, 0);
            continue;
        }
        out.push_back(basis.apply(vector_from_index(f.q(), basis.rows(), i)));
    }
    return out;
}

}  // namespace

Spectrum kernel_spectrum(const LinearCode& code, const Limits& limits) {
    return set_spectrum(span_of(code.generator().left_kernel(), code.n(), limits), code.field());
}

Spectrum image_spectrum(const LinearCode& code, const Limits& limits) {
    auto image = span_of(code.generator().rref(), code.m(), limits);
    if (!code.is_linear())
        for (auto& y : image)
            for (std::size_t j = 0; j < y.size(); ++j) y[j] = code.field().add(y[j], code.offset()[j]);
    return set_spectrum(image, code.field());
}

JointSpectrum ensemble_avg_joint_spectrum(const CodeEnsemble& ensemble, const Limits& limits) {
    const auto support = ensemble.exact_support();
    JointSpectrum avg{ensemble.field().q(), static_cast<std::uint32_t>(ensemble.n()),
                      static_cast<std::uint32_t>(ensemble.m()), {}};
    for (const auto& w : support)
        for (const auto& [k, v] : code_joint_spectrum(w.code, limits).entries) avg.entries[k] += w.prob * v;
    return avg;
}

Rational alpha(const JointSpectrum& avg, const TypeVector& p, const TypeVector& q) {
    const BigInt qn = ipow(avg.q, avg.n);
    const BigInt qm = ipow(avg.q, avg.m);
    Rational sx(type_class_size(p), qn);
    Rational sy(type_class_size(q), qm);
    sx.canonicalize();
    sy.canonicalize();
    Rational r = avg.at(p, q) / (sx * sy);
    r.canonicalize();
    return r;
}

Rational alpha(const CodeEnsemble& ensemble, const TypeVector& p, const TypeVector& q, const Limits& limits) {
    return alpha(ensemble_avg_joint_spectrum(ensemble, limits), p, q);
}

std::map<std::pair<TypeVector, TypeVector>, Rational> alpha_table(const JointSpectrum& avg) {
    std::map<std::pair<TypeVector, TypeVector>, Rational> table;
    for (const auto& p : enumerate_types(avg.n, avg.q))
        for (const auto& q : enumerate_types(avg.m, avg.q)) table.emplace(std::make_pair(p, q), alpha(avg, p, q));
    return table;
}

RhoResult rho(const JointSpectrum& avg) {
    RhoResult best;
    best.rho = -std::numeric_limits<double>::infinity();
    bool found = false;
    for (const auto& [key, mass] : avg.entries) {
        if (key.first.is_zero_type() || sgn(mass) <= 0) continue;
        Rational a = alpha(avg, key.first, key.second);
        if (!found || a > best.alpha) {
            best.alpha = a;
            best.p = key.first;
            best.q = key.second;
            found = true;
        }
    }
    if (found) best.rho = log_rational(best.alpha) / avg.n;
    return best;
}

RhoResult rho(const CodeEnsemble& ensemble, const Limits& limits) {
    return rho(ensemble_avg_joint_spectrum(ensemble, limits));
}

Rational ConditionalSpectrum::at(const TypeVector& given, const TypeVector& target) const {
    const auto& r = row(given);
    auto it = r.find(target);
    return it == r.end() ? Rational(0) : it->second;
}

const std::map<TypeVector, Rational>& ConditionalSpectrum::row(const TypeVector& given) const {
    auto it = rows.find(given);
    if (it == rows.end()) throw Error(ErrorKind::ZeroMarginal, "conditioning type has zero marginal mass");
    return it->second;
}

ConditionalSpectrum conditional_spectrum(const JointSpectrum& joint, Direction direction) {
    ConditionalSpectrum c;
    c.direction = direction;
    const bool fwd = direction == Direction::Forward;
    const Spectrum marg = fwd ? joint.marginal_x() : joint.marginal_y();
    for (const auto& [key, mass] : joint.entries) {
        if (sgn(mass) == 0) continue;
        const TypeVector& given = fwd ? key.first : key.second;
        const TypeVector& target = fwd ? key.second : key.first;
        Rational v = mass / marg.at(given);
        v.canonicalize();
        c.rows[given][target] += v;
    }
    return c;
}

ConditionalSpectrum compose_conditionals(const ConditionalSpectrum& f, const ConditionalSpectrum& g) {
    ConditionalSpectrum out;
    for (const auto& [o, frow] : f.rows) {
        auto& dst = out.rows[o];
        for (const auto& [p, fp] : frow) {
            auto git = g.rows.find(p);
            if (git == g.rows.end()) continue;
            for (const auto& [q, gq] : git->second) dst[q] += fp * gq;
        }
        for (auto it = dst.begin(); it != dst.end();) it = sgn(it->second) == 0 ? dst.erase(it) : std::next(it);
    }
    return out;
}

ConditionalSpectrum compose_avg_conditional(const CodeEnsemble& f, const CodeEnsemble& g, const Limits& limits) {
    if (f.m() != g.n()) throw Error(ErrorKind::DimensionMismatch, "outer output length differs from inner input length");
    if (!(f.field() == g.field())) throw Error(ErrorKind::DimensionMismatch, "stages over different fields");
    return compose_conditionals(conditional_spectrum(ensemble_avg_joint_spectrum(f, limits)),
                                conditional_spectrum(ensemble_avg_joint_spectrum(g, limits)));
}

Rates rates(const LinearCode& code) {
    Rates r;
    r.rank = code.generator().rank();
    const double log_image = static_cast<double>(r.rank) * std::log(static_cast<double>(code.field().q()));
    r.source = log_image / static_cast<double>(code.n());
    r.channel = log_image / static_cast<double>(code.m());
    r.ratio = make_rational(code.n(), code.m());
    r.ratio.canonicalize();
    return r;
}

}  // namespace lscc
