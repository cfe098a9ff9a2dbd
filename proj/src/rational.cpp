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

#include "lscc/rational.hpp"

#include <cmath>
#include <limits>

#include "lscc/error.hpp"

namespace lscc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPrimeP: return "NonPrimeP";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::EmptySequence: return "EmptySequence";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::UnsupportedSampler: return "UnsupportedSampler";
        case ErrorKind::ZeroMarginal: return "ZeroMarginal";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SupportExplosion: return "SupportExplosion";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::NotARefinement: return "NotARefinement";
        case ErrorKind::NotStochastic: return "NotStochastic";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::InvalidProbability: return "InvalidProbability";
        case ErrorKind::NotSCCGood: return "NotSCCGood";
        case ErrorKind::SupportViolation: return "SupportViolation";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt multinomial(std::span<const std::uint32_t> counts) {
    BigInt result = 1;
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
        result *= binomial(total, c);
    }
    return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

BigInt ipow(const BigInt& base, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, std::uint64_t e) {
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    r.canonicalize();
    return r;
}

double log_big(const BigInt& x) {
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_rational(const Rational& x) {
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    return log_big(x.get_num()) - log_big(x.get_den());
}

double to_double(const Rational& x) {
    if (mpz_sizeinbase(x.get_num_mpz_t(), 2) < 1000 && mpz_sizeinbase(x.get_den_mpz_t(), 2) < 1000)
        return x.get_d();
    double l = log_rational(abs(x));
    double v = std::exp(l);
    return sgn(x) < 0 ? -v : v;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
    try {
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            Rational r(text, 10);
            if (sgn(r.get_den()) == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
            r.canonicalize();
            return r;
        }
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        Rational r(BigInt(digits.empty() ? "0" : digits, 10), ipow(10, frac));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
    }
}

}  // namespace lscc
