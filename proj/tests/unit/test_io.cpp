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

#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "lscc/io.hpp"
#include "lscc/rng.hpp"

using namespace lscc;
using fx::mat;

TEST_CASE("matrix text round trip") {
    Rng rng(8);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u}) {
        const Field f = Field::of_order(q);
        const FieldMatrix a = FieldMatrix::random(f, 3, 5, rng);
        std::istringstream in(matrix_to_text(a));
        CHECK(read_matrix(in) == a);
    }
    std::istringstream two("2 1 2\n1 1\n3 2 1\n2\n0\n");
    const auto ms = read_matrices(two);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == mat(2, 1, 2, {1, 1}));
    CHECK(ms[1] == mat(3, 2, 1, {2, 0}));
}

TEST_CASE("matrix parse errors") {
    for (const char* bad : {"", "2 2", "2 1 2\n1", "2 1 2\n1 2", "6 1 1\n0", "2 1 2\n1 x", "2 1 1\n-1"}) {
        std::istringstream in(bad);
        CHECK(fx::error_kind([&] { read_matrix(in); }) == ErrorKind::ParseError);
    }
    CHECK(fx::error_kind([] { read_matrix_file("/nonexistent/path.txt"); }) == ErrorKind::IoError);
}

TEST_CASE("permutations") {
    std::istringstream ok("2 0 1");
    CHECK(read_permutation(ok) == std::vector<std::size_t>{2, 0, 1});
    for (const char* bad : {"0 0", "1 2", "a", ""}) {
        std::istringstream in(bad);
        CHECK(fx::error_kind([&] { read_permutation(in); }) == ErrorKind::ParseError);
    }
}

TEST_CASE("rationals and spectra round trip") {
    for (const Rational& x : {make_rational(0, 1), make_rational(-7, 3), make_rational(1, 1024)})
        CHECK(rational_from_json(rational_fields(x)) == x);
    const Spectrum s = space_spectrum(3, Field::of_order(3));
    CHECK(spectrum_from_json(json::parse(to_json(s).dump())) == s);
    const JointSpectrum j = code_joint_spectrum(fx::code(2, 2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(joint_spectrum_from_json(json::parse(to_json(j).dump())) == j);
    CHECK(fx::error_kind([] { spectrum_from_json(json::parse(R"({"q": 2})")); }) == ErrorKind::ParseError);
}

TEST_CASE("polynomials round trip") {
    const RationalPoly u0 = RationalPoly::variable(Var{"u", 0, 0});
    const RationalPoly v1 = RationalPoly::variable(Var{"v", 2, 1});
    const RationalPoly p = u0 * u0 * make_rational(3, 4) + u0 * v1 * make_rational(-1, 6) + RationalPoly::constant(make_rational(2, 1));
    CHECK(rational_poly_from_json(json::parse(to_json(p).dump())) == p);
    const json names = to_json(p)["vars"];
    CHECK(names.size() == 2);
    CHECK(names[0] == "u[0,0]");
}

TEST_CASE("reports") {
    DesignInput in;
    in.q = 2;
    in.outer_rate = make_rational(1, 5);
    in.p0_min = make_rational(1, 20);
    in.p0_max = make_rational(19, 20);
    in.delta = 0.05;
    in.inner_rate = make_rational(5, 2);
    const json d = to_json(design_concat(in));
    CHECK(d["results"]["c"] == 14);
    CHECK(d["results"]["d"] == 35);
    CHECK(d["certified"] == true);

    const LdgmSample s = ldgm_sample(LdgmParams::make(Field::of_order(2), 2, 3, 2), 4);
    const json side = to_json(s);
    CHECK(side["edges"].size() == s.edges.size());
    CHECK(side["permutation"].size() == s.permutation.size());
}

TEST_CASE("rational text") {
    CHECK(parse_rational("0.95") == make_rational(19, 20));
    CHECK(parse_rational("0.05") == make_rational(1, 20));
    CHECK(parse_rational("010/4") == make_rational(5, 2));
    CHECK(parse_rational("-3") == -3);
    for (const char* bad : {"1/0", "abc", "1.x"}) CHECK(fx::error_kind([&] { parse_rational(bad); }) == ErrorKind::ParseError);
}
