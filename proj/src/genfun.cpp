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

#include "lscc/genfun.hpp"

#include <set>

namespace lscc {

CycPoly promote(const RationalPoly& p) {
    CycPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, CycRational(c));
    return out;
}

RationalPoly to_rational(const CycPoly& p) {
    RationalPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_rational())
            throw Error(ErrorKind::InvariantViolation, "non-rational coefficient " + c.to_string() + " left after transform");
        out.add_term(e, c.constant());
    }
    return out;
}

std::vector<Var> block_vars(const std::string& family, std::uint32_t block, std::uint32_t q) {
    std::vector<Var> v;
    v.reserve(q);
    for (Symbol a = 0; a < q; ++a) v.push_back(Var{family, block, a});
    return v;
}

namespace {

void append_type(Exponent& e, const TypeVector& t) { e.insert(e.end(), t.counts.begin(), t.counts.end()); }

}  // namespace

RationalPoly genfun_of_spectrum(const Spectrum& s, const std::string& family, std::uint32_t block) {
    RationalPoly p(block_vars(family, block, s.q));
    for (const auto& [t, mass] : s.entries) p.add_term(t.counts, mass);
    return p;
}

RationalPoly genfun_of_uspectrum(const USpectrum& s, const std::string& family) {
    std::vector<Var> vars;
    for (std::uint32_t b = 0; b < s.partition.size(); ++b) {
        auto bv = block_vars(family, b, s.q);
        vars.insert(vars.end(), bv.begin(), bv.end());
    }
    RationalPoly p(vars);
    for (const auto& [ut, mass] : s.entries) {
        Exponent e;
        for (const auto& t : ut) append_type(e, t);
        p.add_term(e, mass);
    }
    return p;
}

RationalPoly genfun_of_joint(const JointSpectrum& s) {
    std::vector<Var> vars = block_vars("u", 0, s.q);
    auto v = block_vars("v", 0, s.q);
    vars.insert(vars.end(), v.begin(), v.end());
    RationalPoly p(vars);
    for (const auto& [key, mass] : s.entries) {
        Exponent e;
        append_type(e, key.first);
        append_type(e, key.second);
        p.add_term(e, mass);
    }
    return p;
}

RationalPoly genfun_of_set(const std::vector<Vector>& set, const Field& field) {
    return genfun_of_spectrum(set_spectrum(set, field));
}

RationalPoly genfun_of_set(const std::vector<Vector>& set, const Field& field, const Partition& partition) {
    return genfun_of_uspectrum(u_set_spectrum(set, field, partition));
}

RationalPoly genfun_of_relation(const std::vector<std::pair<Vector, Vector>>& relation, const Field& field,
                                const Partition& u, const Partition& v) {
    if (relation.empty()) throw Error(ErrorKind::EmptySet, "generating function of an empty relation");
    const std::uint32_t q = field.q();
    std::vector<Var> vars;
    for (std::uint32_t b = 0; b < u.size(); ++b) {
        auto bv = block_vars("u", b, q);
        vars.insert(vars.end(), bv.begin(), bv.end());
    }
    for (std::uint32_t b = 0; b < v.size(); ++b) {
        auto bv = block_vars("v", b, q);
        vars.insert(vars.end(), bv.begin(), bv.end());
    }
    std::map<Exponent, std::uint64_t> counts;
    for (const auto& [x, y] : relation) {
        Exponent e;
        for (const auto& t : u_type_of(x, q, u)) append_type(e, t);
        for (const auto& t : u_type_of(y, q, v)) append_type(e, t);
        ++counts[e];
    }
    RationalPoly p(vars);
    for (const auto& [e, c] : counts) p.add_term(e, make_rational(c, relation.size()));
    return p;
}

RationalPoly genfun_of_code(const LinearCode& code, const Partition& u, const Partition& v, const Limits& limits) {
    const std::uint32_t q = code.field().q();
    const std::uint64_t count = checked_power(q, code.n(), limits.max_domain);
    std::vector<std::pair<Vector, Vector>> rel;
    rel.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Vector x = vector_from_index(q, code.n(), i);
        Vector y = code.encode(x);
        rel.emplace_back(std::move(x), std::move(y));
    }
    return genfun_of_relation(rel, code.field(), u, v);
}

RationalPoly genfun_of_code(const LinearCode& code, const Limits& limits) {
    return genfun_of_code(code, Partition::trivial(code.n()), Partition::trivial(code.m()), limits);
}

RationalPoly merge_refinement(const RationalPoly& p, const Partition& coarse, const Partition& fine,
                              const std::string& family) {
    if (!fine.is_refinement_of(coarse))
        throw Error(ErrorKind::NotARefinement, "fine partition does not refine the coarse one");
    for (const auto& v : p.vars())
        if (v.family == family && v.block >= fine.size())
            throw Error(ErrorKind::DimensionMismatch, "variable block outside the fine partition");
    return p.map_vars([&](const Var& v) {
        if (v.family != family) return v;
        const std::size_t first = fine.blocks()[v.block].front();
        return Var{family, static_cast<std::uint32_t>(coarse.block_of(first)), v.symbol};
    });
}

CycPoly substitute_linear(const CycPoly& p, const std::string& family, std::uint32_t block, const DenseMatrix<CycInt>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "character matrix must be square");
    // u_a -> sum_x M(x, a) u_x, so the substitution kernel is M transposed.
    DenseMatrix<CycRational> w(m.rows(), m.cols());
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t x = 0; x < m.cols(); ++x) w(a, x) = to_cyc_rational(m(x, a));
    return substitute_block(p, family, block, w);
}

CycPoly substitute_linear(const RationalPoly& p, const std::string& family, std::uint32_t block,
                          const DenseMatrix<CycInt>& m) {
    return substitute_linear(promote(p), family, block, m);
}

RationalPoly expect_rename(const RationalPoly& p, const std::string& family, std::uint32_t block,
                           const DenseMatrix<Rational>& k) {
    if (k.rows() != k.cols()) throw Error(ErrorKind::DimensionMismatch, "kernel must be square");
    for (std::size_t a = 0; a < k.rows(); ++a) {
        Rational row = 0;
        for (std::size_t b = 0; b < k.cols(); ++b) {
            if (sgn(k(a, b)) < 0) throw Error(ErrorKind::NotStochastic, "negative kernel entry");
            row += k(a, b);
        }
        if (row != 1) throw Error(ErrorKind::NotStochastic, "kernel row " + std::to_string(a) + " sums to " + to_string(row));
    }
    return substitute_block(p, family, block, k);
}

RationalPoly expect_rename_all(const RationalPoly& p, const std::string& family, const DenseMatrix<Rational>& k) {
    RationalPoly out = p;
    for (auto b : blocks_of(p, family)) out = expect_rename(out, family, b, k);
    return out;
}

DenseMatrix<Rational> multiplier_kernel(const Field& field) {
    const std::uint32_t q = field.q();
    DenseMatrix<Rational> k(q, q, Rational(0));
    k(0, 0) = 1;
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b) k(a, b) = Rational(1, q - 1);
    return k;
}

namespace {

template <class Coeff, class Fmt>
std::string render(const GenPoly<Coeff>& p, Fmt fmt) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.sorted_terms()) {
        if (!s.empty()) s += " + ";
        s += fmt(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            s += "*" + p.vars()[i].name();
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

}  // namespace

std::string to_string(const RationalPoly& p) {
    return render(p, [](const Rational& c) { return to_string(c); });
}

std::string to_string(const CycPoly& p) {
    return render(p, [](const CycRational& c) { return c.to_string(); });
}

}  // namespace lscc
