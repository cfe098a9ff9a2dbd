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

#ifndef LSCC_RATIONAL_HPP
#define LSCC_RATIONAL_HPP

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace lscc {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// n! / prod(counts[i]!) with n = sum(counts).
BigInt multinomial(std::span<const std::uint32_t> counts);

BigInt ipow(std::uint64_t base, std::uint64_t e);
BigInt ipow(const BigInt& base, std::uint64_t e);
Rational rpow(const Rational& base, std::uint64_t e);

/// Natural log of a positive big integer without overflow; -inf for zero.
double log_big(const BigInt& x);
/// Natural log of a nonnegative rational; -inf for zero.
double log_rational(const Rational& x);
double to_double(const Rational& x);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

/// Parses "a", "a/b" or a finite decimal like "0.45" exactly.
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// num / den in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace lscc

#endif  // LSCC_RATIONAL_HPP
