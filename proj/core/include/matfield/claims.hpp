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

#ifndef MATFIELD_CLAIMS_HPP
#define MATFIELD_CLAIMS_HPP

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "matfield/algebra.hpp"

namespace matfield {

inline constexpr std::string_view kSuiteVersion = "1.0.0";

enum class Outcome { Holds, Refuted, Unknown, NotInterpretable };
std::string_view outcomeName(Outcome o);

/// Result of one executable check under one mode. Witness / certificate
/// strings are deterministic renderings that re-verify in the same run.
struct CheckResult {
    Outcome outcome;
    std::string detail;
    std::string witness;
    std::string certificate;
};

/// One executable predicate of a claim, with its pinned expected outcome per
/// evaluated mode.
struct SubCheck {
    std::string name;
    std::vector<std::pair<FieldMode, Outcome>> expected;
    std::function<CheckResult(FieldMode, const EngineCaps&)> run;
};

/// A catalogued claim: citation anchor, description and its checks. Ids are
/// unique; every numbered equation (1)-(25) of the source text is covered by
/// at least one claim (see equationCoverage).
struct Claim {
    std::string id;
    std::string ref;
    std::string description;
    std::vector<SubCheck> checks;
};

const std::vector<Claim>& builtinClaims();

/// Equation number (1..25) -> id of a claim covering it.
const std::vector<std::pair<int, std::string>>& equationCoverage();

struct Verdict {
    std::string claimId;
    std::string check;
    FieldMode mode;
    Outcome outcome;
    Outcome expected;
    std::string ref;
    std::string detail;
    std::string witness;
    std::string certificate;
    double elapsedMs;
};

struct Report {
    std::string suiteVersion{kSuiteVersion};
    EngineCaps caps;
    std::vector<Verdict> rows;
    int holds = 0;
    int refuted = 0;
    int unknown = 0;
    int notInterpretable = 0;
    int mismatches = 0;   // rows whose outcome differs from the pinned expectation
};

/// Runs one claim (all subchecks, optionally filtered by mode); throws
/// InputError for unknown ids.
std::vector<Verdict> runClaim(const std::string& id, const EngineCaps& caps = {},
                              const std::optional<std::set<FieldMode>>& modeFilter = std::nullopt);

/// Runs the selected claims in deterministic id order and assembles a report
/// with summary counts and expected/actual mismatches.
Report runAll(const std::optional<std::set<std::string>>& idFilter = std::nullopt,
              const std::optional<std::set<FieldMode>>& modeFilter = std::nullopt,
              const EngineCaps& caps = {});

/// Exact evaluation of sum (c_u * M_u)^2. signs holds the sign of each M_u^2
/// relative to the identity (+1 / -1, 0 when M_u^2 is not +-identity);
/// lambda is present when the sum is a scalar multiple of the identity.
struct SpacetimeResult {
    Matrix value;
    std::optional<GaussianRational> lambda;
    std::vector<int> signs;
};
SpacetimeResult spacetimeForm(const std::vector<std::pair<Matrix, GaussianRational>>& terms);

/// Convenience for the four-term square form with coefficients
/// (x, y, z, c*t) over the given unit matrices.
SpacetimeResult spacetimeForm(const Rational& x, const Rational& y, const Rational& z,
                              const Rational& t, const Rational& c,
                              const std::array<Matrix, 4>& units);

} // namespace matfield

#endif
