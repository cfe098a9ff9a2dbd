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


#ifndef LSCC_GENFUN_HPP
#define LSCC_GENFUN_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lscc/cyclotomic.hpp"
#include "lscc/dense.hpp"
#include "lscc/error.hpp"
#include "lscc/rational.hpp"
#include "lscc/spectra.hpp"

namespace lscc {

/// Indeterminate u[block, symbol] of a named family ("u" for inputs, "v" for outputs).
struct Var {
    std::string family;
    std::uint32_t block = 0;
    Symbol symbol = 0;

    std::string name() const { return family + "[" + std::to_string(block) + "," + std::to_string(symbol) + "]"; }
    friend bool operator==(const Var&, const Var&) = default;
    friend auto operator<=>(const Var&, const Var&) = default;
};

using Exponent = std::vector<std::uint32_t>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : e) h = (h ^ x) * 0x100000001b3ull;
        return h;
    }
};

inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const CycRational& c) { return c.is_zero(); }

/// Sparse multivariate polynomial over Rational or CycRational.
template <class Coeff>
class GenPoly {
public:
    using TermMap = std::unordered_map<Exponent, Coeff, ExponentHash>;

    GenPoly() = default;
    explicit GenPoly(std::vector<Var> vars) : vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    static GenPoly constant(const Coeff& c) {
        GenPoly p;
        p.add_term({}, c);
        return p;
    }
    static GenPoly variable(const Var& v) {
        GenPoly p({v});
        p.add_term({1}, Coeff(Rational(1)));
        return p;
    }

    const std::vector<Var>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int index_of(const Var& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        return (it != vars_.end() && *it == v) ? static_cast<int>(it - vars_.begin()) : -1;
    }

    void add_term(const Exponent& e, const Coeff& c) {
        if (e.size() != vars_.size()) throw Error(ErrorKind::DimensionMismatch, "exponent arity mismatch");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coef(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(Rational(0)) : it->second;
    }

    /// Coefficient of the monomial prod v^k; variables absent from the polynomial force zero.
    Coeff coef(const std::map<Var, std::uint32_t>& monomial) const {
        Exponent e(vars_.size(), 0);
        for (const auto& [v, k] : monomial) {
            const int i = index_of(v);
            if (i < 0) {
                if (k != 0) return Coeff(Rational(0));
                continue;
            }
            e[i] = k;
        }
        return coef(e);
    }

    /// Value at all variables equal to one.
    Coeff sum_of_coefficients() const {
        Coeff s(Rational(0));
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Same polynomial over a superset of its variables.
    GenPoly with_vars(const std::vector<Var>& superset) const {
        GenPoly out(superset);
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const int j = out.index_of(vars_[i]);
            if (j < 0) throw Error(ErrorKind::DimensionMismatch, "variable " + vars_[i].name() + " missing in superset");
            where[i] = static_cast<std::size_t>(j);
        }
        for (const auto& [e, c] : terms_) {
            Exponent f(out.vars_.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// Renames variables; variables that collide are identified (exponents add).
    GenPoly map_vars(const std::function<Var(const Var&)>& f) const {
        std::vector<Var> renamed;
        renamed.reserve(vars_.size());
        for (const auto& v : vars_) renamed.push_back(f(v));
        GenPoly out(renamed);
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) where[i] = static_cast<std::size_t>(out.index_of(renamed[i]));
        for (const auto& [e, c] : terms_) {
            Exponent g(out.vars_.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) g[where[i]] += e[i];
            out.add_term(g, c);
        }
        return out;
    }

    GenPoly& operator+=(const GenPoly& o) { return accumulate(o, false); }
    GenPoly& operator-=(const GenPoly& o) { return accumulate(o, true); }

    GenPoly& operator*=(const Coeff& s) {
        if (coeff_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
    friend GenPoly operator*(GenPoly a, const Coeff& s) { return a *= s; }

    friend GenPoly operator*(const GenPoly& a, const GenPoly& b) {
        const std::vector<Var> all = union_vars(a.vars_, b.vars_);
        const GenPoly x = a.with_vars(all);
        const GenPoly y = b.with_vars(all);
        GenPoly out(all);
        Exponent e(all.size());
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    GenPoly& operator*=(const GenPoly& o) { return *this = *this * o; }

    GenPoly pow(std::uint32_t k) const {
        GenPoly result = constant(Coeff(Rational(1))).with_vars({});
        GenPoly base = *this;
        while (k) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    friend bool operator==(const GenPoly& a, const GenPoly& b) {
        const std::vector<Var> all = union_vars(a.vars_, b.vars_);
        const GenPoly x = a.with_vars(all);
        const GenPoly y = b.with_vars(all);
        if (x.terms_.size() != y.terms_.size()) return false;
        for (const auto& [e, c] : x.terms_) {
            auto it = y.terms_.find(e);
            if (it == y.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    /// Terms in ascending exponent order, for serialization and printing.
    std::vector<std::pair<Exponent, Coeff>> sorted_terms() const {
        std::vector<std::pair<Exponent, Coeff>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        return v;
    }

    /// Drops variables that appear with exponent zero in every term.
    GenPoly trimmed() const {
        std::vector<Var> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            bool used = false;
            for (const auto& [e, c] : terms_) used = used || e[i] != 0;
            if (used) keep.push_back(vars_[i]);
        }
        GenPoly out(keep);
        for (const auto& [e, c] : terms_) {
            Exponent f;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (std::binary_search(keep.begin(), keep.end(), vars_[i])) f.push_back(e[i]);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    static std::vector<Var> union_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
        std::vector<Var> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

private:
    GenPoly& accumulate(const GenPoly& o, bool negate) {
        const std::vector<Var> all = union_vars(vars_, o.vars_);
        if (all.size() != vars_.size()) *this = with_vars(all);
        const GenPoly y = o.vars_.size() == all.size() ? o : o.with_vars(all);
        for (const auto& [e, c] : y.terms_) add_term(e, negate ? Coeff(-c) : c);
        return *this;
    }

    std::vector<Var> vars_;
    TermMap terms_;
};

using RationalPoly = GenPoly<Rational>;
using CycPoly = GenPoly<CycRational>;

CycPoly promote(const RationalPoly& p);
/// Throws InvariantViolation if some coefficient is not rational.
RationalPoly to_rational(const CycPoly& p);

/// The variables family[block, 0..q-1].
std::vector<Var> block_vars(const std::string& family, std::uint32_t block, std::uint32_t q);

/// sum_P S(P) prod_a u[block,a]^{nP(a)}.
RationalPoly genfun_of_spectrum(const Spectrum& s, const std::string& family = "u", std::uint32_t block = 0);
RationalPoly genfun_of_uspectrum(const USpectrum& s, const std::string& family = "u");
/// Input types in family u, output types in family v.
RationalPoly genfun_of_joint(const JointSpectrum& s);

RationalPoly genfun_of_set(const std::vector<Vector>& set, const Field& field);
RationalPoly genfun_of_set(const std::vector<Vector>& set, const Field& field, const Partition& partition);
RationalPoly genfun_of_relation(const std::vector<std::pair<Vector, Vector>>& relation, const Field& field,
                                const Partition& u, const Partition& v);
RationalPoly genfun_of_code(const LinearCode& code, const Partition& u, const Partition& v, const Limits& limits = {});
RationalPoly genfun_of_code(const LinearCode& code, const Limits& limits = {});

/// Identifies family[b, a] for the fine blocks b inside each coarse block.
RationalPoly merge_refinement(const RationalPoly& p, const Partition& coarse, const Partition& fine,
                              const std::string& family = "u");

/// Replaces each family[block, a] by sum_b w(a, b) family[block, b].
template <class Coeff>
GenPoly<Coeff> substitute_block(const GenPoly<Coeff>& p, const std::string& family, std::uint32_t block,
                                const DenseMatrix<Coeff>& w);

/// u_block -> u_block M, i.e. u[block, a] -> sum_x M(x, a) u[block, x].
CycPoly substitute_linear(const CycPoly& p, const std::string& family, std::uint32_t block, const DenseMatrix<CycInt>& m);
CycPoly substitute_linear(const RationalPoly& p, const std::string& family, std::uint32_t block,
                          const DenseMatrix<CycInt>& m);

/// u[block, a] -> sum_b K(a, b) u[block, b]; rows of K must be probability vectors.
RationalPoly expect_rename(const RationalPoly& p, const std::string& family, std::uint32_t block,
                           const DenseMatrix<Rational>& k);
/// expect_rename on every block of the family present in p.
RationalPoly expect_rename_all(const RationalPoly& p, const std::string& family, const DenseMatrix<Rational>& k);

/// K(0, .) = delta_0, K(a, .) uniform on nonzero elements for a != 0.
DenseMatrix<Rational> multiplier_kernel(const Field& field);

/// Exchanges the names of two variable families.
template <class Coeff>
GenPoly<Coeff> swap_families(const GenPoly<Coeff>& p, const std::string& a, const std::string& b) {
    return p.map_vars([&](const Var& v) {
        if (v.family == a) return Var{b, v.block, v.symbol};
        if (v.family == b) return Var{a, v.block, v.symbol};
        return v;
    });
}

/// Distinct block indices of a family in p.
template <class Coeff>
std::vector<std::uint32_t> blocks_of(const GenPoly<Coeff>& p, const std::string& family) {
    std::vector<std::uint32_t> out;
    for (const auto& v : p.vars())
        if (v.family == family && (out.empty() || out.back() != v.block)) out.push_back(v.block);
    return out;
}

std::string to_string(const RationalPoly& p);
std::string to_string(const CycPoly& p);

// ---------------------------------------------------------------------------

template <class Coeff>
GenPoly<Coeff> substitute_block(const GenPoly<Coeff>& p, const std::string& family, std::uint32_t block,
                                const DenseMatrix<Coeff>& w) {
    const std::size_t q = w.rows();
    if (w.cols() != q) throw Error(ErrorKind::DimensionMismatch, "substitution matrix must be square");
    for (const auto& v : p.vars())
        if (v.family == family && v.block == block && v.symbol >= q)
            throw Error(ErrorKind::DimensionMismatch, "substitution matrix smaller than the alphabet");

    std::vector<Var> all = GenPoly<Coeff>::union_vars(p.vars(), block_vars(family, block, static_cast<std::uint32_t>(q)));
    const GenPoly<Coeff> src = p.with_vars(all);
    std::vector<std::size_t> idx(q);
    for (std::size_t a = 0; a < q; ++a) idx[a] = static_cast<std::size_t>(src.index_of(Var{family, block, static_cast<Symbol>(a)}));

    // Powers of the block's linear forms, as dense-exponent polynomials in the q block variables.
    using BlockPoly = std::map<Exponent, Coeff>;
    auto mul = [q](const BlockPoly& x, const BlockPoly& y) {
        BlockPoly r;
        Exponent e(q);
        for (const auto& [ex, cx] : x)
            for (const auto& [ey, cy] : y) {
                for (std::size_t i = 0; i < q; ++i) e[i] = ex[i] + ey[i];
                auto [it, ins] = r.try_emplace(e, cx * cy);
                if (!ins) it->second += cx * cy;
            }
        for (auto it = r.begin(); it != r.end();) it = coeff_is_zero(it->second) ? r.erase(it) : std::next(it);
        return r;
    };
    std::vector<std::vector<BlockPoly>> powers(q);
    auto power = [&](std::size_t a, std::uint32_t k) -> const BlockPoly& {
        auto& cache = powers[a];
        if (cache.empty()) {
            BlockPoly one;
            one.emplace(Exponent(q, 0), Coeff(Rational(1)));
            cache.push_back(std::move(one));
        }
        if (cache.size() == 1) {
            BlockPoly lin;
            for (std::size_t b = 0; b < q; ++b) {
                if (coeff_is_zero(w(a, b))) continue;
                Exponent e(q, 0);
                e[b] = 1;
                lin.emplace(std::move(e), w(a, b));
            }
            cache.push_back(std::move(lin));
        }
        while (cache.size() <= k) cache.push_back(mul(cache.back(), cache[1]));
        return cache[k];
    };
    std::map<Exponent, BlockPoly> products;

    GenPoly<Coeff> out(all);
    for (const auto& [e, c] : src.terms()) {
        Exponent key(q);
        for (std::size_t a = 0; a < q; ++a) key[a] = e[idx[a]];
        auto it = products.find(key);
        if (it == products.end()) {
            BlockPoly prod;
            prod.emplace(Exponent(q, 0), Coeff(Rational(1)));
            for (std::size_t a = 0; a < q; ++a)
                if (key[a]) prod = mul(prod, power(a, key[a]));
            it = products.emplace(key, std::move(prod)).first;
        }
        Exponent f = e;
        for (const auto& [be, bc] : it->second) {
            for (std::size_t a = 0; a < q; ++a) f[idx[a]] = be[a];
            out.add_term(f, c * bc);
        }
    }
    return out;
}

}  // namespace lscc

#endif  // LSCC_GENFUN_HPP
