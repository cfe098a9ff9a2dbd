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

#ifndef LSCC_CYCLOTOMIC_HPP
#define LSCC_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lscc/error.hpp"
#include "lscc/rational.hpp"

namespace lscc {

/**
 * Element of Scalar[zeta_p], zeta_p a primitive p-th root of unity.
 *
 * Stored in the spanning set 1, zeta, ..., zeta^{p-1} subject to
 * 1 + zeta + ... + zeta^{p-1} = 0. The canonical form has the last
 * coordinate zero, so two values are equal iff their coordinates are.
 *
 * p == 1 marks a plain scalar that has not been tied to any p yet; it is
 * lifted on first contact with a cyclotomic value.
 */
template <class Scalar>
class Cyclotomic {
public:
    Cyclotomic() : p_(1), c_(1, Scalar(0)) {}
    Cyclotomic(const Scalar& s) : p_(1), c_(1, s) {}  // NOLINT(implicit)
    Cyclotomic(std::uint32_t p, std::vector<Scalar> coeffs) : p_(p), c_(std::move(coeffs)) {
        if (p_ == 0 || c_.size() != p_)
            throw Error(ErrorKind::DimensionMismatch, "cyclotomic coefficient vector must have length p");
        normalize();
    }

    static Cyclotomic zeta_power(std::uint32_t p, std::uint32_t k) {
        std::vector<Scalar> c(p, Scalar(0));
        c[k % p] = Scalar(1);
        return Cyclotomic(p, std::move(c));
    }

    std::uint32_t p() const { return p_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_scalar_only() const { return p_ == 1; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// True when the value lies in Scalar (all non-constant coordinates vanish).
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const Scalar& constant() const { return c_[0]; }

    /// Complex conjugation: zeta^k -> zeta^{-k}.
    Cyclotomic conj() const {
        if (p_ == 1) return *this;
        std::vector<Scalar> c(p_, Scalar(0));
        for (std::uint32_t k = 0; k < p_; ++k) c[(p_ - k) % p_] = c_[k];
        return Cyclotomic(p_, std::move(c));
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        unify(o);
        if (o.p_ == p_) {
            for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        } else {
            c_[0] += o.c_[0];
        }
        normalize();
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        unify(o);
        if (o.p_ != p_) {
            for (auto& x : c_) x *= o.c_[0];
            return *this;
        }
        if (p_ == 1) {
            c_[0] *= o.c_[0];
            return *this;
        }
        std::vector<Scalar> r(p_, Scalar(0));
        for (std::uint32_t i = 0; i < p_; ++i) {
            if (c_[i] == 0) continue;
            for (std::uint32_t j = 0; j < p_; ++j) {
                if (o.c_[j] == 0) continue;
                r[(i + j) % p_] += c_[i] * o.c_[j];
            }
        }
        c_ = std::move(r);
        normalize();
        return *this;
    }

    Cyclotomic& operator*=(const Scalar& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.p_ == b.p_) return a.c_ == b.c_;
        if (a.p_ == 1) return b.is_rational() && b.c_[0] == a.c_[0];
        if (b.p_ == 1) return a.is_rational() && a.c_[0] == b.c_[0];
        // Different nontrivial p only agree on rationals.
        return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].get_str();
        }
        return s + "]";
    }

private:
    void unify(const Cyclotomic& o) {
        if (p_ == o.p_ || o.p_ == 1) return;
        if (p_ == 1) {
            Scalar s = c_[0];
            c_.assign(o.p_, Scalar(0));
            c_[0] = s;
            p_ = o.p_;
            return;
        }
        throw Error(ErrorKind::RingMismatch, "cyclotomic values for p=" + std::to_string(p_) +
                                                 " and p=" + std::to_string(o.p_) + " cannot be combined");
    }

    void normalize() {
        if (p_ <= 1) return;
        Scalar last = c_[p_ - 1];
        if (last == 0) return;
        for (auto& x : c_) x -= last;
    }

    std::uint32_t p_;
    std::vector<Scalar> c_;
};

using CycInt = Cyclotomic<BigInt>;
using CycRational = Cyclotomic<Rational>;

inline CycRational to_cyc_rational(const CycInt& x) {
    if (x.is_scalar_only()) return CycRational(Rational(x.constant()));
    std::vector<Rational> c;
    c.reserve(x.coeffs().size());
    for (const auto& v : x.coeffs()) c.emplace_back(v);
    return CycRational(x.p(), std::move(c));
}

}  // namespace lscc

#endif  // LSCC_CYCLOTOMIC_HPP
