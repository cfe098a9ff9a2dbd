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


#ifndef LSCC_IO_HPP
#define LSCC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "lscc/designer.hpp"
#include "lscc/genfun.hpp"
#include "lscc/ldgm.hpp"
#include "lscc/matrix.hpp"
#include "lscc/mrd.hpp"
#include "lscc/spectra.hpp"

namespace lscc {

using json = nlohmann::ordered_json;

// Matrix text format: "q n m", then n rows of m integers in [0, q).
FieldMatrix read_matrix(std::istream& in);
/// Reads consecutive matrix blocks until end of input.
std::vector<FieldMatrix> read_matrices(std::istream& in);
FieldMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const FieldMatrix& a);
std::string matrix_to_text(const FieldMatrix& a);

/// Whitespace-separated 0-based permutation: entry i is the image of position i.
std::vector<std::size_t> read_permutation(std::istream& in);
std::vector<std::size_t> read_permutation_file(const std::string& path);

json rational_fields(const Rational& r);  // {"num": str, "den": str}
Rational rational_from_json(const json& j);

json to_json(const Spectrum& s);
json to_json(const USpectrum& s);
json to_json(const JointSpectrum& s);
Spectrum spectrum_from_json(const json& j);
JointSpectrum joint_spectrum_from_json(const json& j);

json to_json(const RationalPoly& p);
json to_json(const CycPoly& p);
RationalPoly rational_poly_from_json(const json& j);

json to_json(const DesignResult& r);
json to_json(const EquivalenceReport& r);
json to_json(const LowerBoundCheck& c);
json to_json(const LdgmSample& s);  // edge-structure sidecar
json to_json(const MrdReport& r);
json to_json(const SccReport& r);
json to_json(const KernelStats& k);

}  // namespace lscc

#endif  // LSCC_IO_HPP
