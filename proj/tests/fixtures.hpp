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


#ifndef LSCC_TESTS_FIXTURES_HPP
#define LSCC_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "lscc/ensemble.hpp"
#include "lscc/error.hpp"
#include "lscc/matrix.hpp"
#include "lscc/spectra.hpp"

namespace fx {

inline lscc::FieldMatrix mat(std::uint32_t q, std::size_t rows, std::size_t cols, std::initializer_list<lscc::Symbol> data) {
    return lscc::FieldMatrix(lscc::Field::of_order(q), rows, cols, std::vector<lscc::Symbol>(data));
}

inline lscc::LinearCode code(std::uint32_t q, std::size_t rows, std::size_t cols, std::initializer_list<lscc::Symbol> data) {
    return lscc::LinearCode(mat(q, rows, cols, data));
}

inline lscc::TypeVector tv(std::initializer_list<std::uint32_t> counts) { return lscc::TypeVector{std::vector<std::uint32_t>(counts)}; }

/// Kind of the Error thrown by fn, or nullopt.
template <class Fn>
std::optional<lscc::ErrorKind> error_kind(Fn&& fn) {
    try {
        fn();
    } catch (const lscc::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline std::vector<std::pair<lscc::FieldMatrix, lscc::Rational>> support_pairs(const lscc::CodeEnsemble& e) {
    std::vector<std::pair<lscc::FieldMatrix, lscc::Rational>> out;
    for (const auto& w : e.exact_support()) out.emplace_back(w.code.generator(), w.prob);
    return out;
}

}  // namespace fx

#endif  // LSCC_TESTS_FIXTURES_HPP
