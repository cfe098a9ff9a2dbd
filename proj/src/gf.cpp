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

#include "lscc/gf.hpp"

#include <map>
#include <utility>

#include "lscc/error.hpp"

namespace lscc {

namespace {

// Default moduli, ascending coefficients.
const std::map<std::pair<std::uint32_t, std::uint32_t>, PrimePoly>& builtin_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, PrimePoly> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
        {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{7, 5}, {4, 1, 0, 0, 0, 1}},
    };
    return table;
}

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo g over GF(p); g nonzero.
PrimePoly poly_mod(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t(f.back()) * lead_inv % p);
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint64_t sub = std::uint64_t(factor) * g[i] % p;
            f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
        }
        trim(f);
    }
    return f;
}

std::vector<std::uint32_t> digits_of(Symbol a, std::uint32_t p, std::uint32_t r) {
    std::vector<std::uint32_t> d(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Symbol index_of(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Symbol a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// Product in GF(p)[x]/(modulus) on digit vectors; used only while building tables.
Symbol slow_mul(Symbol a, Symbol b, const PrimePoly& modulus, std::uint32_t p, std::uint32_t r) {
    auto da = digits_of(a, p, r);
    auto db = digits_of(b, p, r);
    PrimePoly prod(2 * r, 0);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < r; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
    PrimePoly rem = poly_mod(prod, modulus, p);
    rem.resize(r, 0);
    return index_of(rem, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(const PrimePoly& f_in, std::uint32_t p) {
    PrimePoly f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2 (degree 1
    // covers the root check).
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<PrimePoly> builtin_modulus(std::uint32_t p, std::uint32_t r) {
    const auto& t = builtin_table();
    auto it = t.find({p, r});
    if (it == t.end()) return std::nullopt;
    return it->second;
}

Field Field::make(std::uint32_t p, std::uint32_t r, std::optional<PrimePoly> modulus, std::uint32_t max_q) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, "p=" + std::to_string(p) + " is not prime");
    if (r < 1) throw Error(ErrorKind::DomainError, "extension degree must be >= 1");
    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q64 *= p;
        if (q64 > max_q)
            throw Error(ErrorKind::FieldTooLarge,
                        "GF(" + std::to_string(p) + "^" + std::to_string(r) + ") exceeds limit " + std::to_string(max_q));
    }
    const auto q = static_cast<std::uint32_t>(q64);

    PrimePoly mod;
    if (modulus) {
        mod = *modulus;
        for (auto& c : mod) {
            if (c >= p) throw Error(ErrorKind::DomainError, "modulus coefficient out of range");
        }
        trim(mod);
        if (mod.size() != r + 1)
            throw Error(ErrorKind::DimensionMismatch, "modulus must have degree " + std::to_string(r));
        const std::uint32_t li = inv_mod_p(mod.back(), p);
        for (auto& c : mod) c = static_cast<std::uint32_t>(std::uint64_t(c) * li % p);
        if (!is_irreducible(mod, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
    } else {
        auto b = builtin_modulus(p, r);
        if (!b)
            throw Error(ErrorKind::DomainError, "no built-in modulus for GF(" + std::to_string(p) + "^" +
                                                    std::to_string(r) + "); supply one");
        mod = *b;
    }

    auto spec = std::make_shared<FieldSpec>();
    spec->p = p;
    spec->r = r;
    spec->q = q;
    spec->modulus = mod;

    // Negation is digitwise.
    spec->neg_table.resize(q);
    for (Symbol a = 0; a < q; ++a) {
        auto d = digits_of(a, p, r);
        for (auto& x : d) x = (p - x) % p;
        spec->neg_table[a] = index_of(d, p);
    }

    // Find a primitive element and build exp/log tables.
    if (q == 2) {
        spec->primitive = 1;
    } else {
        for (Symbol g = 2; g < q + 1; ++g) {
            const Symbol cand = (g == q) ? 1 : g;
            std::uint32_t order = 1;
            Symbol acc = cand;
            while (acc != 1) {
                acc = slow_mul(acc, cand, mod, p, r);
                ++order;
                if (order > q) break;
            }
            if (order == q - 1) {
                spec->primitive = cand;
                break;
            }
        }
        if (spec->primitive == 0 && !(p == q && q == 2))
            throw Error(ErrorKind::InvariantViolation, "no primitive element found; modulus not irreducible?");
    }
    spec->exp_table.resize(2 * (q - 1));
    spec->log_table.assign(q, 0);
    Symbol acc = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        spec->exp_table[k] = acc;
        spec->log_table[acc] = k;
        acc = slow_mul(acc, spec->primitive, mod, p, r);
    }
    for (std::uint32_t k = q - 1; k < 2 * (q - 1); ++k) spec->exp_table[k] = spec->exp_table[k - (q - 1)];

    spec->inv_table.assign(q, 0);
    for (Symbol a = 1; a < q; ++a) spec->inv_table[a] = spec->exp_table[(q - 1 - spec->log_table[a]) % (q - 1)];

    if (q <= kAddTableLimit && p != 2) {
        spec->add_table.resize(std::size_t(q) * q);
        for (Symbol a = 0; a < q; ++a) {
            auto da = digits_of(a, p, r);
            for (Symbol b = 0; b < q; ++b) {
                auto db = digits_of(b, p, r);
                for (std::uint32_t i = 0; i < r; ++i) db[i] = (da[i] + db[i]) % p;
                spec->add_table[std::size_t(a) * q + b] = index_of(db, p);
            }
        }
    }

    Field field(spec);
    // Tr(x) = x + x^p + ... + x^{p^{r-1}}
    spec->trace_table.assign(q, 0);
    for (Symbol a = 0; a < q; ++a) {
        Symbol t = 0;
        Symbol power = a;
        for (std::uint32_t i = 0; i < r; ++i) {
            t = field.add(t, power);
            power = field.pow(power, p);
        }
        if (t >= p) throw Error(ErrorKind::InvariantViolation, "trace left the prime subfield");
        spec->trace_table[a] = t;
    }
    return field;
}

Field Field::of_order(std::uint32_t q) {
    if (q < 2) throw Error(ErrorKind::DomainError, "field order must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t r = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++r;
    }
    if (t != 1) throw Error(ErrorKind::NonPrimeP, std::to_string(q) + " is not a prime power");
    return make(p, r);
}

Symbol Field::add_digits(Symbol a, Symbol b) const {
    const std::uint32_t p = spec_->p;
    Symbol result = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_->r; ++i) {
        result += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return result;
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw Error(ErrorKind::DomainError, "inverse of zero");
    return spec_->inv_table[a];
}

Symbol Field::pow(Symbol a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t k = (std::uint64_t(spec_->log_table[a]) * (e % (spec_->q - 1))) % (spec_->q - 1);
    return spec_->exp_table[k];
}

std::string Field::describe() const {
    std::string s = "GF(" + std::to_string(p()) + "^" + std::to_string(r()) + ") modulus [";
    for (std::size_t i = 0; i < spec_->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec_->modulus[i]);
    }
    return s + "]";
}

FieldElement::FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.q()) throw Error(ErrorKind::DomainError, "element index out of range");
}

FieldElement trace(const FieldElement& x) { return {x.field(), x.field().trace(x.value())}; }

CycInt chi(const Field& field, Symbol x) {
    // For p = 2, zeta = -1 and the basis {1, zeta} normalizes to a plain integer.
    return CycInt::zeta_power(field.p(), field.trace(x));
}

DenseMatrix<CycInt> mw_matrix(const Field& field) {
    const std::uint32_t q = field.q();
    DenseMatrix<CycInt> m(q, q);
    for (Symbol a = 0; a < q; ++a)
        for (Symbol b = 0; b < q; ++b) m(a, b) = chi(field, field.mul(a, b));
    return m;
}

}  // namespace lscc
