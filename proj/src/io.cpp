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

#include "lscc/io.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lscc/error.hpp"

namespace lscc {

namespace {

bool next_value(std::istream& in, long long& v) {
    if (in >> v) return true;
    if (!in.eof()) throw Error(ErrorKind::ParseError, "expected an integer");
    return false;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    return in;
}

}  // namespace

FieldMatrix read_matrix(std::istream& in) {
    long long q = 0, n = 0, m = 0;
    if (!next_value(in, q) || !next_value(in, n) || !next_value(in, m))
        throw Error(ErrorKind::ParseError, "missing \"q n m\" header");
    if (q < 2 || n < 0 || m < 0) throw Error(ErrorKind::ParseError, "bad matrix header");
    if (q > (1 << 16)) throw Error(ErrorKind::ParseError, "field order too large");
    Field field;
    try {
        field = Field::of_order(static_cast<std::uint32_t>(q));
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, std::string("bad field order: ") + e.what());
    }
    std::vector<Symbol> data(static_cast<std::size_t>(n * m));
    for (auto& x : data) {
        long long v = 0;
        if (!next_value(in, v)) throw Error(ErrorKind::ParseError, "matrix body is truncated");
        if (v < 0 || v >= q) throw Error(ErrorKind::ParseError, "entry " + std::to_string(v) + " outside [0, q)");
        x = static_cast<Symbol>(v);
    }
    return FieldMatrix(field, static_cast<std::size_t>(n), static_cast<std::size_t>(m), std::move(data));
}

std::vector<FieldMatrix> read_matrices(std::istream& in) {
    std::vector<FieldMatrix> out;
    while (in >> std::ws, in.peek() != std::char_traits<char>::eof()) out.push_back(read_matrix(in));
    return out;
}

FieldMatrix read_matrix_file(const std::string& path) {
    auto in = open(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const FieldMatrix& a) {
    out << a.field().q() << ' ' << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
        out << '\n';
    }
}

std::string matrix_to_text(const FieldMatrix& a) {
    std::ostringstream s;
    write_matrix(s, a);
    return s.str();
}

std::vector<std::size_t> read_permutation(std::istream& in) {
    std::vector<std::size_t> perm;
    long long v = 0;
    while (next_value(in, v)) {
        if (v < 0) throw Error(ErrorKind::ParseError, "negative permutation entry");
        perm.push_back(static_cast<std::size_t>(v));
    }
    if (perm.empty()) throw Error(ErrorKind::ParseError, "empty permutation");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw Error(ErrorKind::ParseError, "not a permutation");
        seen[p] = true;
    }
    return perm;
}

std::vector<std::size_t> read_permutation_file(const std::string& path) {
    auto in = open(path);
    return read_permutation(in);
}

json rational_fields(const Rational& r) {
    return json{{"num", to_string(BigInt(r.get_num()))}, {"den", to_string(BigInt(r.get_den()))}};
}

Rational rational_from_json(const json& j) {
    try {
        return make_rational(BigInt(j.at("num").get<std::string>(), 10), BigInt(j.at("den").get<std::string>(), 10));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad rational: ") + e.what());
    }
}

namespace {

// Runs a JSON decoder, reporting malformed documents as ParseError.
template <class Fn>
auto decode(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("bad ") + what + ": " + e.what());
    }
}

void put_rational(json& target, const Rational& r) {
    target["num"] = to_string(BigInt(r.get_num()));
    target["den"] = to_string(BigInt(r.get_den()));
}

json entry(const char* key, const TypeVector& t, const Rational& r) {
    json e;
    e[key] = t.counts;
    put_rational(e, r);
    return e;
}

TypeVector type_from(const json& j) { return TypeVector{j.get<std::vector<std::uint32_t>>()}; }

}  // namespace

json to_json(const Spectrum& s) {
    json j{{"q", s.q}, {"n", s.n}, {"entries", json::array()}};
    for (const auto& [t, r] : s.entries) j["entries"].push_back(entry("type", t, r));
    return j;
}

json to_json(const USpectrum& s) {
    json j{{"q", s.q}, {"partition", s.partition.blocks()}, {"entries", json::array()}};
    for (const auto& [u, r] : s.entries) {
        json e{{"types", json::array()}};
        for (const auto& t : u) e["types"].push_back(t.counts);
        put_rational(e, r);
        j["entries"].push_back(std::move(e));
    }
    return j;
}

json to_json(const JointSpectrum& s) {
    json j{{"q", s.q}, {"n", s.n}, {"m", s.m}, {"entries", json::array()}};
    for (const auto& [key, r] : s.entries) {
        json e = entry("type_x", key.first, r);
        e["type_y"] = key.second.counts;
        j["entries"].push_back(std::move(e));
    }
    return j;
}

Spectrum spectrum_from_json(const json& j) {
    return decode("spectrum", [&] {
        Spectrum s;
        s.q = j.at("q").get<std::uint32_t>();
        s.n = j.at("n").get<std::uint32_t>();
        for (const auto& e : j.at("entries")) s.entries[type_from(e.at("type"))] = rational_from_json(e);
        return s;
    });
}

JointSpectrum joint_spectrum_from_json(const json& j) {
    return decode("joint spectrum", [&] {
        JointSpectrum s;
        s.q = j.at("q").get<std::uint32_t>();
        s.n = j.at("n").get<std::uint32_t>();
        s.m = j.at("m").get<std::uint32_t>();
        for (const auto& e : j.at("entries"))
            s.entries[{type_from(e.at("type_x")), type_from(e.at("type_y"))}] = rational_from_json(e);
        return s;
    });
}

namespace {

json vars_json(const std::vector<Var>& vars) {
    json a = json::array();
    for (const auto& v : vars) a.push_back(v.name());
    return a;
}

Var parse_var(const std::string& name) {
    const auto open_b = name.find('[');
    const auto comma = name.find(',', open_b);
    const auto close_b = name.find(']', comma);
    if (open_b == std::string::npos || comma == std::string::npos || close_b == std::string::npos)
        throw Error(ErrorKind::ParseError, "bad variable name " + name);
    Var v;
    v.family = name.substr(0, open_b);
    v.block = static_cast<std::uint32_t>(std::stoul(name.substr(open_b + 1, comma - open_b - 1)));
    v.symbol = static_cast<Symbol>(std::stoul(name.substr(comma + 1, close_b - comma - 1)));
    return v;
}

}  // namespace

json to_json(const RationalPoly& p) {
    json j{{"vars", vars_json(p.vars())}, {"terms", json::array()}};
    for (const auto& [e, c] : p.sorted_terms()) {
        json t{{"exp", e}};
        put_rational(t, c);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

json to_json(const CycPoly& p) {
    json j{{"vars", vars_json(p.vars())}, {"terms", json::array()}};
    for (const auto& [e, c] : p.sorted_terms()) {
        // Common denominator over the cyclotomic coordinates.
        BigInt den = 1;
        for (const auto& x : c.coeffs()) {
            BigInt g;
            mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
            den = g;
        }
        json cyc = json::array();
        for (const auto& x : c.coeffs()) cyc.push_back(to_string(BigInt(x * den)));
        j["terms"].push_back(json{{"exp", e}, {"cyc", cyc}, {"den", to_string(den)}});
    }
    return j;
}

RationalPoly rational_poly_from_json(const json& j) {
    return decode("polynomial", [&] {
        std::vector<Var> vars;
        for (const auto& n : j.at("vars")) vars.push_back(parse_var(n.get<std::string>()));
        RationalPoly p = RationalPoly::constant(0).with_vars(vars);
        for (const auto& t : j.at("terms")) {
            if (t.contains("cyc")) throw Error(ErrorKind::ParseError, "cyclotomic term in a rational polynomial");
            p.add_term(t.at("exp").get<Exponent>(), rational_from_json(t));
        }
        return p;
    });
}

json to_json(const DesignResult& r) {
    json in{{"q", r.input.q},
            {"outer_rate", to_string(r.input.outer_rate)},
            {"p0_min", to_string(r.input.p0_min)},
            {"p0_max", to_string(r.input.p0_max)},
            {"delta", r.input.delta},
            {"inner_rate", to_string(r.input.inner_rate)}};
    json formulas{{"gamma", "max(1/q - p0_min, p0_max - 1/q)"},
                  {"rho0", "(1/r0) ln(1 + (q-1) (q gamma/(q-1))^d)"},
                  {"d_min", "smallest d with rho0(d) <= delta * R(f)"},
                  {"inner", "d = smallest multiple of numerator(r0) >= d_min, c = d / r0"},
                  {"final_bound", "rho0 / R(f), with R(f) of this instance"}};
    json out{{"gamma1", r.gamma1},       {"gamma2", r.gamma2}, {"gamma", r.gamma},
             {"inner_delta", r.inner_delta}, {"d_min", r.d_min}, {"c", r.c},
             {"d", r.d},                 {"rho0", r.rho0},     {"final_bound", r.final_bound}};
    return json{{"inputs", in}, {"formulas", formulas}, {"results", out}, {"certified", r.certified}};
}

json to_json(const EquivalenceReport& r) {
    json j{{"mode", r.mode == EquivalenceMode::G1 ? "g1" : "g2"}, {"exact", r.exact}};
    if (r.exact) j["probability"] = rational_fields(r.probability);
    j["estimate"] = r.estimate;
    if (!r.exact) j["wilson95"] = {r.ci_low, r.ci_high};
    j["samples"] = r.samples;
    j["kq"] = r.kq;
    j["above_kq"] = r.above_kq;
    return j;
}

json to_json(const LowerBoundCheck& c) {
    return json{{"bound", rational_fields(c.bound)},
                {"max_alpha", rational_fields(c.max_alpha)},
                {"respected", c.respected}};
}

json to_json(const LdgmSample& s) {
    const auto& p = s.params;
    json j{{"q", p.field.q()}, {"c", p.c},   {"d", p.d},
           {"n", p.n},         {"c_prime", p.c_prime}, {"d_prime", p.d_prime},
           {"permutation", s.permutation}, {"multipliers", s.multipliers}, {"edges", json::array()}, {"rows", json::array()}};
    for (const auto& e : s.edges)
        j["edges"].push_back({{"input", e.input}, {"slot", e.slot}, {"position", e.position}, {"check", e.check},
                              {"multiplier", e.multiplier}});
    for (const auto& row : s.rows) {
        json r = json::array();
        for (const auto& [col, coef] : row) r.push_back({col, coef});
        j["rows"].push_back(std::move(r));
    }
    return j;
}

json to_json(const MrdReport& r) {
    return json{{"size", to_string(r.size)},
                {"expected_size", to_string(r.expected_size)},
                {"distinct", r.distinct},
                {"min_distance", r.min_distance},
                {"expected_distance", r.expected_distance},
                {"singleton_bound", to_string(r.singleton_bound)},
                {"passed", r.passed}};
}

json to_json(const SccReport& r) {
    json j{{"uniform", r.uniform}, {"column_property", r.column_property}, {"passed", r.passed()}};
    if (r.witness) j["witness"] = {{"x", r.witness->x}, {"y", r.witness->y}, {"prob", rational_fields(r.witness->prob)}};
    if (r.column_witness) j["column_witness"] = *r.column_witness;
    return j;
}

json to_json(const KernelStats& k) {
    json dist = json::array();
    for (const auto& [size, prob] : k.distribution) {
        json e{{"kernel_size", to_string(size)}};
        put_rational(e, prob);
        dist.push_back(std::move(e));
    }
    return json{{"distribution", dist},
                {"expected_size", rational_fields(k.expected_size)},
                {"identity_value", rational_fields(k.identity_value)},
                {"identity_holds", k.identity_holds},
                {"prob_injective", rational_fields(k.prob_injective)},
                {"lower_bound", rational_fields(k.lower_bound)},
                {"bound_applies", k.bound_applies},
                {"bound_holds", k.bound_holds}};
}

}  // namespace lscc
