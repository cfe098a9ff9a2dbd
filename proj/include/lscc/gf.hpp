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

#ifndef LSCC_GF_HPP
#define LSCC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lscc/cyclotomic.hpp"
#include "lscc/dense.hpp"

namespace lscc {

/// Field element index in [0, q). The digits of the index in base p are the
/// coefficients of the element in the polynomial basis 1, x, ..., x^{r-1}.
using Symbol = std::uint32_t;

/// Polynomial over GF(p), coefficients in ascending degree order.
using PrimePoly = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kDefaultMaxFieldSize = 1u << 16;

struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    std::uint32_t q = 0;
    PrimePoly modulus;  // monic, degree r
    Symbol primitive = 0;
    std::vector<Symbol> exp_table;   // length 2(q-1)
    std::vector<std::uint32_t> log_table;
    std::vector<Symbol> neg_table;
    std::vector<Symbol> inv_table;
    std::vector<Symbol> trace_table;
    std::vector<Symbol> add_table;   // q*q, only when q <= kAddTableLimit
};

/**
 * Handle to an immutable GF(p^r). Copies share the tables; all arithmetic
 * works on raw Symbol indices.
 */
class Field {
public:
    static constexpr std::uint32_t kAddTableLimit = 256;

    /// Builds GF(p^r). Without a modulus the built-in table for
    /// p in {2,3,5,7}, r <= 8 is used; otherwise one must be supplied.
    static Field make(std::uint32_t p, std::uint32_t r, std::optional<PrimePoly> modulus = std::nullopt,
                      std::uint32_t max_q = kDefaultMaxFieldSize);

    /// GF(q) for a prime power q, using the built-in modulus.
    static Field of_order(std::uint32_t q);

    Field() = default;

    std::uint32_t p() const { return spec_->p; }
    std::uint32_t r() const { return spec_->r; }
    std::uint32_t q() const { return spec_->q; }
    const PrimePoly& modulus() const { return spec_->modulus; }
    Symbol primitive_element() const { return spec_->primitive; }
    bool valid() const { return static_cast<bool>(spec_); }

    Symbol add(Symbol a, Symbol b) const {
        if (spec_->p == 2) return a ^ b;
        if (!spec_->add_table.empty()) return spec_->add_table[a * spec_->q + b];
        return add_digits(a, b);
    }
    Symbol neg(Symbol a) const { return spec_->neg_table[a]; }
    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        return spec_->exp_table[spec_->log_table[a] + spec_->log_table[b]];
    }
    /// Multiplicative inverse; a must be nonzero.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, std::uint64_t e) const;

    /// Absolute trace onto the prime subfield, returned as an index in [0, p).
    Symbol trace(Symbol a) const { return spec_->trace_table[a]; }

    /// Embeds c in GF(p) as a field element.
    Symbol from_prime(std::uint32_t c) const { return c % spec_->p; }

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) {
        if (a.spec_ == b.spec_) return true;
        if (!a.spec_ || !b.spec_) return false;
        return a.spec_->p == b.spec_->p && a.spec_->r == b.spec_->r && a.spec_->modulus == b.spec_->modulus;
    }

private:
    explicit Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {}
    Symbol add_digits(Symbol a, Symbol b) const;

    std::shared_ptr<const FieldSpec> spec_;
};

/// Value-semantic field element bound to its field.
class FieldElement {
public:
    FieldElement(Field field, Symbol value);

    Symbol value() const { return value_; }
    const Field& field() const { return field_; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(value_, o.value_)}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(value_, o.value_)}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(value_, o.value_)}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_.div(value_, o.value_)}; }
    FieldElement operator-() const { return {field_, field_.neg(value_)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Symbol value_;
};

/// The built-in default modulus for GF(p^r), if there is one.
std::optional<PrimePoly> builtin_modulus(std::uint32_t p, std::uint32_t r);

bool is_prime(std::uint64_t n);

/// Irreducibility over GF(p) by root check plus trial division by every
/// monic polynomial of degree <= deg/2.
bool is_irreducible(const PrimePoly& f, std::uint32_t p);

FieldElement trace(const FieldElement& x);

/// Additive character zeta_p^{Tr(x)}.
CycInt chi(const Field& field, Symbol x);
inline CycInt chi(const FieldElement& x) { return chi(x.field(), x.value()); }

/// q x q matrix with entries chi(a1 * a2), indexed by field element index.
DenseMatrix<CycInt> mw_matrix(const Field& field);

}  // namespace lscc

#endif  // LSCC_GF_HPP
