/*
   Copyright 2026 The matfield authors

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

#ifndef MATFIELD_SPEC_IO_HPP
#define MATFIELD_SPEC_IO_HPP

#include <string>

#include "matfield/claims.hpp"

namespace matfield {

/// Parsed algebra spec file. The on-disk format is a JSON object with keys
///   name       string
///   rank       integer (2..)
///   field      "Q" | "QI" | "Q_AS_R" | "QI_AS_C"
///   bracket    "mul" | "comm" | "anticomm"   (optional, default "mul")
///   generators array of rank x rank matrices, rows of scalar literals
/// Scalar literals follow the shared grammar ("-1/2", "3+1/2i", "-1i");
/// plain JSON integers are accepted as well. Unknown keys are rejected.
struct SpecFileData {
    std::string name;
    int rank = 0;
    FieldMode mode = FieldMode::Q;
    Bracket bracket = Bracket::Mul;
    std::vector<Matrix> generators;

    AlgebraSpec toAlgebraSpec() const { return {name, generators, mode, bracket}; }
};

SpecFileData parseSpecText(const std::string& text);
SpecFileData loadSpecFile(const std::string& path);

/// Parses the report text form of a matrix, e.g. [[0,-1],[1,0]].
Matrix parseMatrixLiteral(const std::string& text);

// ---- deterministic rendering ---------------------------------------------

/// Human-readable verdict line for a classification, e.g.
/// "FIELD (primitive element ..., min poly t^2+1)".
std::string verdictString(const Classification& cls);

std::string renderClassificationText(const std::string& name, const Classification& cls);
std::string renderClassificationJson(const std::string& name, const Classification& cls);

std::string renderClosureText(const std::string& name, const ClosureResult& closure, Bracket bracket);

std::string renderTableText(const Basis& basis, const StructureConstants& table);
std::string renderTableCsv(const Basis& basis, const StructureConstants& table);

/// Text report: byte-identical across runs on identical inputs (timings are
/// deliberately excluded). This is the golden-file format.
std::string renderReportText(const Report& report);

/// Machine report with lexicographically ordered keys; includes elapsed_ms
/// per check, which is the one non-deterministic field.
std::string renderReportJson(const Report& report);

} // namespace matfield

#endif
