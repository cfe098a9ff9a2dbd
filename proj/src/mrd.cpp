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

#include "lscc/mrd.hpp"

#include <set>

#include "lscc/error.hpp"

namespace lscc {

namespace {

// Lexicographically first monic irreducible of the given degree over GF(p).
PrimePoly first_irreducible(std::uint32_t p, std::uint32_t degree) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PrimePoly f(degree + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[degree] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::InvariantViolation, "no irreducible polynomial found");
}

Symbol eval_prime_poly(const Field& f, const PrimePoly& poly, Symbol x) {
    Symbol acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), f.from_prime(poly[i]));
    return acc;
}

}  // namespace

GabidulinSpec GabidulinSpec::make(const Field& base, std::size_t n, std::size_t m, std::size_t k,
                                  std::optional<std::vector<Symbol>> points, std::optional<std::vector<Symbol>> basis) {
    if (n < 1 || m < 1) throw Error(ErrorKind::DomainError, "n and m must be >= 1");
    if (k < 1 || k > std::min(n, m)) throw Error(ErrorKind::DomainError, "k must lie in [1, min(n, m)]");
    GabidulinSpec s;
    s.base_ = base;
    s.n_ = n;
    s.m_ = m;
    s.k_ = k;
    s.n_ext_ = std::max(n, m);
    s.m_pts_ = std::min(n, m);
    s.transposed_ = m > n;

    const std::uint32_t p = base.p();
    const std::uint32_t r = base.r();
    const std::uint32_t q = base.q();
    const auto degree = static_cast<std::uint32_t>(r * s.n_ext_);
    if (s.n_ext_ == 1) {
        s.ext_ = base;
    } else {
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < degree; ++i) {
            size *= p;
            if (size > kDefaultMaxFieldSize)
                throw Error(ErrorKind::FieldTooLarge, "extension GF(" + std::to_string(p) + "^" + std::to_string(degree) +
                                                          ") exceeds the field size limit");
        }
        auto mod = builtin_modulus(p, degree);
        s.ext_ = Field::make(p, degree, mod ? *mod : first_irreducible(p, degree));
    }
    const Field& ext = s.ext_;

    // Base field inside the extension via a root of the base modulus.
    s.embed_.assign(q, 0);
    if (s.n_ext_ == 1 || r == 1) {
        for (Symbol c = 0; c < q; ++c) s.embed_[c] = (s.n_ext_ == 1) ? c : ext.from_prime(c);
    } else {
        Symbol beta = 0;
        bool found = false;
        for (Symbol x = 1; x < ext.q() && !found; ++x)
            if (eval_prime_poly(ext, base.modulus(), x) == 0) {
                beta = x;
                found = true;
            }
        if (!found) throw Error(ErrorKind::InvariantViolation, "base modulus has no root in the extension");
        for (Symbol c = 0; c < q; ++c) {
            Symbol acc = 0, power = 1;
            Symbol t = c;
            for (std::uint32_t i = 0; i < r; ++i) {
                acc = ext.add(acc, ext.mul(ext.from_prime(t % p), power));
                t /= p;
                power = ext.mul(power, beta);
            }
            s.embed_[c] = acc;
        }
    }

    if (basis) {
        s.basis_ = *basis;
    } else {
        const Symbol gen = (ext.r() > 1) ? p : ext.primitive_element();
        s.basis_.resize(s.n_ext_);
        for (std::size_t j = 0; j < s.n_ext_; ++j) s.basis_[j] = ext.pow(gen, j);
    }
    if (s.basis_.size() != s.n_ext_) throw Error(ErrorKind::DimensionMismatch, "basis must have n' elements");
    for (Symbol b : s.basis_)
        if (b >= ext.q()) throw Error(ErrorKind::DomainError, "basis element outside the extension");

    s.coords_.assign(ext.q(), Vector{});
    for (std::uint64_t idx = 0; idx < ext.q(); ++idx) {
        Vector c = vector_from_index(q, s.n_ext_, idx);
        Symbol v = 0;
        for (std::size_t j = 0; j < s.n_ext_; ++j) v = ext.add(v, ext.mul(s.embed_[c[j]], s.basis_[j]));
        if (!s.coords_[v].empty()) throw Error(ErrorKind::DomainError, "basis is not linearly independent over GF(q)");
        s.coords_[v] = std::move(c);
    }

    s.points_ = points ? *points : std::vector<Symbol>(s.basis_.begin(), s.basis_.begin() + s.m_pts_);
    if (s.points_.size() != s.m_pts_) throw Error(ErrorKind::DimensionMismatch, "need min(n, m) evaluation points");
    FieldMatrix pc(base, s.m_pts_, s.n_ext_);
    for (std::size_t j = 0; j < s.m_pts_; ++j) {
        if (s.points_[j] >= ext.q()) throw Error(ErrorKind::DomainError, "point outside the extension");
        for (std::size_t i = 0; i < s.n_ext_; ++i) pc(j, i) = s.coords_[s.points_[j]][i];
    }
    if (pc.rank() != s.m_pts_) throw Error(ErrorKind::DomainError, "points are not linearly independent over GF(q)");
    return s;
}

Symbol GabidulinSpec::frobenius(Symbol x, std::size_t i) const {
    for (std::size_t t = 0; t < i; ++t) x = ext_.pow(x, base_.q());
    return x;
}

BigInt GabidulinSpec::code_size() const { return ipow(base_.q(), k_ * n_ext_); }

MatrixCodeword gabidulin_encode(const GabidulinSpec& spec, const std::vector<Symbol>& message) {
    if (message.size() != spec.k()) throw Error(ErrorKind::DimensionMismatch, "message must have k symbols");
    const Field& ext = spec.ext();
    FieldMatrix c(spec.base(), spec.n_ext(), spec.m_pts());
    for (std::size_t j = 0; j < spec.m_pts(); ++j) {
        Symbol v = 0;
        Symbol xp = spec.points()[j];
        for (std::size_t i = 0; i < spec.k(); ++i) {
            if (message[i] >= ext.q()) throw Error(ErrorKind::DomainError, "message symbol outside the extension");
            v = ext.add(v, ext.mul(message[i], xp));
            xp = ext.pow(xp, spec.base().q());
        }
        const Vector& col = spec.coordinates(v);
        for (std::size_t i = 0; i < spec.n_ext(); ++i) c(i, j) = col[i];
    }
    return MatrixCodeword(spec.transposed() ? c.transpose() : c);
}

std::vector<MatrixCodeword> enumerate_code(const GabidulinSpec& spec, std::uint64_t limit) {
    const std::uint64_t count = checked_power(spec.ext().q(), spec.k(), limit);
    std::vector<MatrixCodeword> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx)
        out.push_back(gabidulin_encode(spec, vector_from_index(spec.ext().q(), spec.k(), idx)));
    return out;
}

MatrixCodeword sample_code(const GabidulinSpec& spec, Rng& rng) {
    std::vector<Symbol> msg(spec.k());
    for (auto& s : msg) s = static_cast<Symbol>(rng.below(spec.ext().q()));
    return gabidulin_encode(spec, msg);
}

MatrixCodeword sample_code(const GabidulinSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return sample_code(spec, rng);
}

std::size_t min_rank_distance(const std::vector<MatrixCodeword>& code) {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            if (code[i].entries == code[j].entries) return 0;
            best = std::min(best, (code[i].entries - code[j].entries).rank());
        }
    return best == SIZE_MAX ? 0 : best;
}

std::size_t min_rank_weight(const std::vector<MatrixCodeword>& code) {
    std::size_t best = SIZE_MAX;
    for (const auto& c : code)
        if (c.rank > 0) best = std::min(best, c.rank);
    return best == SIZE_MAX ? 0 : best;
}

MrdReport verify_mrd(const GabidulinSpec& spec, std::uint64_t limit) {
    const auto code = enumerate_code(spec, limit);
    MrdReport r;
    r.size = BigInt(static_cast<unsigned long>(code.size()));
    r.expected_size = spec.code_size();
    std::set<FieldMatrix> distinct;
    for (const auto& c : code) distinct.insert(c.entries);
    r.distinct = distinct.size() == code.size();
    r.min_distance = min_rank_weight(code);
    r.expected_distance = spec.m_pts() - spec.k() + 1;
    const std::size_t d = r.min_distance;
    r.singleton_bound = d >= 1 && d <= spec.m_pts() + 1 ? ipow(spec.base().q(), spec.n_ext() * (spec.m_pts() - d + 1))
                                                        : BigInt(0);
    r.passed = r.distinct && r.size == r.expected_size && r.min_distance == r.expected_distance &&
               r.size == r.singleton_bound;
    return r;
}

MatrixSupport uniform_support(const std::vector<MatrixCodeword>& code) {
    if (code.empty()) throw Error(ErrorKind::EmptySet, "empty code");
    MatrixSupport s;
    const Rational p(1, code.size());
    for (const auto& c : code) s.emplace_back(c.entries, p);
    return s;
}

MatrixSupport coset_support(const std::vector<MatrixCodeword>& code, const FieldMatrix& e) {
    MatrixSupport s = uniform_support(code);
    for (auto& [a, p] : s) a = a + e;
    return s;
}

MatrixSupport support_of(const CodeEnsemble& ensemble) {
    MatrixSupport s;
    for (const auto& w : ensemble.exact_support()) {
        if (!w.code.is_linear()) throw Error(ErrorKind::DomainError, "affine ensemble member has no matrix form");
        s.emplace_back(w.code.generator(), w.prob);
    }
    return s;
}

CodeEnsemble ensemble_of(const MatrixSupport& support) {
    std::vector<WeightedCode> w;
    w.reserve(support.size());
    for (const auto& [a, p] : support) w.push_back({LinearCode(a), p});
    return CodeEnsemble::from_support(std::move(w));
}

CodeEnsemble gabidulin_ensemble(const GabidulinSpec& spec, std::uint64_t limit) {
    checked_power(spec.ext().q(), spec.k(), limit);
    CodeEnsemble::Sampler sampler = [spec](Rng& rng) { return LinearCode(sample_code(spec, rng).entries); };
    CodeEnsemble::Enumerator enumerator = [spec, limit]() {
        std::vector<WeightedCode> w;
        for (const auto& [a, p] : uniform_support(enumerate_code(spec, limit))) w.push_back({LinearCode(a), p});
        return w;
    };
    return CodeEnsemble::from_sampler(spec.base(), spec.n(), spec.m(), SupportFamily::Gabidulin, std::move(sampler),
                                      std::move(enumerator));
}

SccReport verify_scc(const MatrixSupport& support, std::uint64_t limit) {
    if (support.empty()) throw Error(ErrorKind::EmptySet, "empty support");
    const Field field = support.front().first.field();
    const std::uint32_t q = field.q();
    const std::size_t n = support.front().first.rows();
    const std::size_t m = support.front().first.cols();
    const std::uint64_t qn = checked_power(q, n, limit);
    const std::uint64_t qm = checked_power(q, m, limit);
    if (BigInt(static_cast<unsigned long>(qn)) * qm > BigInt(static_cast<unsigned long>(limit)))
        throw Error(ErrorKind::TooLarge, "q^n q^m exceeds limit");
    const Rational target(1, qm);

    SccReport r;
    r.uniform = true;
    std::vector<Rational> mass(qm);
    for (std::uint64_t xi = 1; xi < qn && r.uniform; ++xi) {
        const Vector x = vector_from_index(q, n, xi);
        std::fill(mass.begin(), mass.end(), Rational(0));
        for (const auto& [a, p] : support) mass[index_of_vector(q, a.apply(x))] += p;
        for (std::uint64_t yi = 0; yi < qm; ++yi)
            if (mass[yi] != target) {
                r.uniform = false;
                r.witness = SccWitness{x, vector_from_index(q, m, yi), mass[yi]};
                break;
            }
    }

    r.column_property = true;
    for (std::uint64_t yi = 1; yi < qm && r.column_property; ++yi) {
        const Vector y = vector_from_index(q, m, yi);
        std::set<std::uint64_t> hit;
        for (const auto& [a, p] : support)
            if (sgn(p) > 0) hit.insert(index_of_vector(q, a.apply_right(y)));
        if (hit.size() != qn) {
            r.column_property = false;
            r.column_witness = y;
        }
    }
    return r;
}

SccReport verify_scc(const GabidulinSpec& spec, std::uint64_t limit) {
    return verify_scc(uniform_support(enumerate_code(spec, limit)), limit);
}

void require_scc(const MatrixSupport& support, std::uint64_t limit) {
    const SccReport r = verify_scc(support, limit);
    if (r.uniform) return;
    std::string x, y;
    for (auto s : r.witness->x) x += std::to_string(s);
    for (auto s : r.witness->y) y += std::to_string(s);
    throw Error(ErrorKind::NotSCCGood, "P{F(" + x + ") = " + y + "} = " + to_string(r.witness->prob));
}

KernelStats kernel_stats(const MatrixSupport& support) {
    if (support.empty()) throw Error(ErrorKind::EmptySet, "empty support");
    const Field field = support.front().first.field();
    const std::uint32_t q = field.q();
    const std::size_t n = support.front().first.rows();
    const std::size_t m = support.front().first.cols();
    KernelStats k;
    for (const auto& [a, p] : support) k.distribution[ipow(q, n - a.rank())] += p;
    k.expected_size = 0;
    for (const auto& [size, p] : k.distribution) k.expected_size += Rational(size) * p;
    k.expected_size.canonicalize();
    auto it = k.distribution.find(BigInt(1));
    k.prob_injective = it == k.distribution.end() ? Rational(0) : it->second;
    k.identity_value = Rational(1) + make_rational(ipow(q, n) - 1, ipow(q, m));
    k.identity_holds = k.expected_size == k.identity_value;
    const std::uint32_t p = field.p();
    k.lower_bound = (Rational(p) - 2 + make_rational(1, ipow(q, n))) / Rational(p - 1);
    k.lower_bound.canonicalize();
    k.bound_applies = n == m;
    k.bound_holds = !k.bound_applies || k.prob_injective >= k.lower_bound;
    return k;
}

}  // namespace lscc
