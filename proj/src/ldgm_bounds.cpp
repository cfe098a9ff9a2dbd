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

#include <cmath>
#include <limits>
#include <sstream>

#include "lscc/error.hpp"
#include "lscc/ldgm.hpp"

namespace lscc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// w * ln(v) with 0 * ln(0) = 0.
double weighted_log(double w, double v) {
    if (w == 0) return 0;
    if (v < 0) throw Error(ErrorKind::DomainError, "logarithm of a negative number");
    if (v == 0) return -kInf;
    return w * std::log(v);
}

void check_unit(double x, const char* name) {
    if (!(x >= 0 && x <= 1)) throw Error(ErrorKind::DomainError, std::string(name) + " must lie in [0, 1]");
}

}  // namespace

double divergence(double x, double y) {
    check_unit(x, "x");
    check_unit(y, "y");
    auto term = [](double a, double b) -> double {
        if (a == 0) return 0;
        if (b == 0) return kInf;
        return a * std::log(a / b);
    };
    return term(x, y) + term(1 - x, 1 - y);
}

double entropy(const TypeVector& p) {
    const double n = p.n();
    double h = 0;
    for (auto c : p.counts)
        if (c) h -= (c / n) * std::log(c / n);
    return h;
}

double Delta(const TypeVector& p) { return entropy(p) - log_big(type_class_size(p)) / p.n(); }

double J(std::uint32_t q, std::uint32_t d, double x, double y) {
    check_unit(x, "x");
    check_unit(y, "y");
    // t = s^d with s = (qx - 1)/(q - 1); 1 - |t| goes through expm1 so x near 0 or 1 keeps precision.
    const double qd = q;
    const double log_abs_s = x >= 1 / qd ? std::log1p(-qd * (1 - x) / (qd - 1)) : std::log1p(-(qd * x + qd - 2) / (qd - 1));
    const double u = d * log_abs_s;
    const double abs_t = std::exp(u);
    const double one_minus_abs_t = -std::expm1(u);
    const bool negative = x < 1 / qd && d % 2 == 1;
    const double a = negative ? (q == 2 ? one_minus_abs_t : 1 - (qd - 1) * abs_t) : 1 + (qd - 1) * abs_t;
    const double b = negative ? 1 + abs_t : one_minus_abs_t;
    return weighted_log(y, std::max(a, 0.0)) + weighted_log(1 - y, std::max(b, 0.0));
}

double j_upper_bound(std::uint32_t q, std::uint32_t d, double x, double y) {
    check_unit(x, "x");
    check_unit(y, "y");
    const double t = std::pow((q * x - 1) / (q - 1), static_cast<double>(d));
    const double v = 1 + (q * y - 1) * t;
    if (v < 0) throw Error(ErrorKind::DomainError, "logarithm of a negative number");
    return v == 0 ? -kInf : std::log(v);
}

double delta_qd(std::uint32_t q, std::uint32_t d, double x, double y, const DeltaOptions& options) {
    check_unit(x, "x");
    check_unit(y, "y");
    auto objective = [&](double xh) { return d * divergence(x, xh) + J(q, d, xh, y); };

    // x_hat = x is admissible for interior x and is the limiting value at x in {0, 1}.
    double best = J(q, d, x, y);
    const std::size_t grid = std::max<std::size_t>(options.grid, 3);
    std::size_t best_i = 0;
    double best_grid = kInf;
    for (std::size_t i = 1; i < grid; ++i) {
        const double v = objective(static_cast<double>(i) / grid);
        if (v < best_grid) {
            best_grid = v;
            best_i = i;
        }
    }
    if (best_i != 0) {
        double lo = static_cast<double>(best_i - 1) / grid;
        double hi = static_cast<double>(best_i + 1) / grid;
        lo = std::max(lo, 1e-300);
        hi = std::min(hi, 1 - 1e-16);
        const double phi = (std::sqrt(5.0) - 1) / 2;
        double a = hi - phi * (hi - lo);
        double b = lo + phi * (hi - lo);
        double fa = objective(a), fb = objective(b);
        while (hi - lo > options.tol * 1e-3) {
            if (fa < fb) {
                hi = b;
                b = a;
                fb = fa;
                a = hi - phi * (hi - lo);
                fa = objective(a);
            } else {
                lo = a;
                a = b;
                fa = fb;
                b = lo + phi * (hi - lo);
                fb = objective(b);
            }
        }
        best_grid = std::min({best_grid, fa, fb});
    }
    return std::min(best, best_grid);
}

double rho0(std::uint32_t q, double r0, double gamma, std::uint32_t d) {
    return std::log1p((q - 1) * std::pow(q * gamma / (q - 1), static_cast<double>(d))) / r0;
}

Rho0Result rho0_and_dq(std::uint32_t q, double r0, double gamma1, double gamma2, double delta) {
    if (q < 2) throw Error(ErrorKind::DomainError, "q must be >= 2");
    if (!(r0 > 0)) throw Error(ErrorKind::DomainError, "r0 must be positive");
    if (!(delta > 0)) throw Error(ErrorKind::DomainError, "delta must be positive");
    if (!(gamma1 > 0 && gamma1 <= 1.0 / q) || gamma1 == 0.5)
        throw Error(ErrorKind::DomainError, "gamma1 must lie in (0, 1/q] and differ from 1/2");
    if (!(gamma2 > 0 && gamma2 < static_cast<double>(q - 1) / q))
        throw Error(ErrorKind::DomainError, "gamma2 must lie in (0, (q-1)/q)");
    Rho0Result r;
    r.gamma = std::max(gamma1, gamma2);
    const double ratio = q * r.gamma / (q - 1);
    const double target = std::log(std::expm1(r0 * delta) / (q - 1));
    double dq = std::ceil(target / std::log(ratio));
    std::uint32_t d = dq < 1 ? 1 : static_cast<std::uint32_t>(dq);
    // Guard the ceiling against rounding on either side.
    while (d > 1 && rho0(q, r0, r.gamma, d - 1) <= delta) --d;
    while (rho0(q, r0, r.gamma, d) > delta) ++d;
    r.d_min = d;
    r.rho0 = rho0(q, r0, r.gamma, d);
    r.rho0_previous = d > 1 ? rho0(q, r0, r.gamma, d - 1) : kInf;
    return r;
}

mpf_class kq_product(std::uint32_t q, std::uint32_t terms, unsigned precision_bits) {
    mpf_class prod(1, precision_bits), pw(1, precision_bits);
    const mpf_class inv_q = mpf_class(1, precision_bits) / q;
    for (std::uint32_t i = 1; i <= terms; ++i) {
        pw *= inv_q;
        prod *= (1 - pw);
    }
    return prod;
}

mpf_class kq_pentagonal(std::uint32_t q, std::uint32_t terms, unsigned precision_bits) {
    mpf_class sum(1, precision_bits);
    auto inv_pow = [&](std::uint64_t e) {
        mpf_class b(q, precision_bits), r(1, precision_bits);
        mpf_pow_ui(r.get_mpf_t(), b.get_mpf_t(), e);
        return mpf_class(mpf_class(1, precision_bits) / r, precision_bits);
    };
    for (std::uint64_t k = 1; k <= terms; ++k) {
        mpf_class t = inv_pow(k * (3 * k - 1) / 2) + inv_pow(k * (3 * k + 1) / 2);
        if (k % 2)
            sum -= t;
        else
            sum += t;
    }
    return sum;
}

Rational kq_partial_product(std::uint32_t q, std::uint32_t terms) {
    Rational prod = 1;
    for (std::uint32_t i = 1; i <= terms; ++i) prod *= Rational(1) - make_rational(1, ipow(q, i));
    prod.canonicalize();
    return prod;
}

std::string format_mpf(const mpf_class& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << x;
    return os.str();
}

}  // namespace lscc
