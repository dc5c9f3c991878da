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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "matfield/spec_io.hpp"
#include "oracle_helpers.hpp"

using namespace matfield;

TEST_CASE("catalog structure") {
    const auto& claims = builtinClaims();
    REQUIRE(claims.size() == 19);
    std::set<std::string> ids;
    for (const auto& c : claims) {
        CHECK(ids.insert(c.id).second);   // unique ids
        CHECK(!c.ref.empty());
        CHECK(!c.checks.empty());
        for (const auto& sc : c.checks) {
            CHECK(!sc.expected.empty());
            CHECK(static_cast<bool>(sc.run));
        }
    }
    for (int k = 1; k <= 19; ++k) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "CL-%02d", k);
        CHECK(ids.count(buf) == 1);
    }
}

TEST_CASE("every numbered equation is covered") {
    const auto& cover = equationCoverage();
    std::set<int> eqs;
    std::set<std::string> ids;
    for (const auto& c : builtinClaims()) ids.insert(c.id);
    for (const auto& [eq, id] : cover) {
        eqs.insert(eq);
        CHECK(ids.count(id) == 1);
    }
    for (int eq = 1; eq <= 25; ++eq) CHECK(eqs.count(eq) == 1);
}

TEST_CASE("pinned expectations in the catalog") {
    const auto& claims = builtinClaims();
    auto find = [&](const std::string& id) -> const Claim& {
        for (const auto& c : claims)
            if (c.id == id) return c;
        REQUIRE(false);
        return claims.front();
    };
    const Claim& cl01 = find("CL-01");
    CHECK(cl01.checks.front().name == "table");
    CHECK(cl01.checks.front().expected.front().second == Outcome::Holds);

    const Claim& cl13 = find("CL-13");
    bool foundField = false;
    for (const auto& sc : cl13.checks)
        if (sc.name == "field") {
            foundField = true;
            for (const auto& [mode, expected] : sc.expected) CHECK(expected == Outcome::Refuted);
        }
    CHECK(foundField);

    const Claim& cl19 = find("CL-19");
    CHECK(cl19.checks.front().expected.front().second == Outcome::NotInterpretable);
}

TEST_CASE("run single claims") {
    auto v1 = runClaim("CL-01");
    REQUIRE(!v1.empty());
    CHECK(v1.front().outcome == Outcome::Holds);
    for (const auto& v : v1) CHECK(v.outcome == v.expected);

    auto v5 = runClaim("CL-05");
    CHECK(v5.size() == 1);
    CHECK(v5.front().outcome == Outcome::Holds);

    auto v8 = runClaim("CL-08");
    bool sawQ = false, sawC = false;
    for (const auto& v : v8) {
        if (v.check != "field") continue;
        if (v.mode == FieldMode::Q) {
            sawQ = true;
            CHECK(v.outcome == Outcome::Holds);
            CHECK(!v.certificate.empty());
        }
        if (v.mode == FieldMode::QIAsC) {
            sawC = true;
            CHECK(v.outcome == Outcome::Refuted);
            CHECK(v.witness.find("zero divisor") != std::string::npos);
        }
    }
    CHECK(sawQ);
    CHECK(sawC);

    CHECK_THROWS_AS(runClaim("CL-99"), InputError);
}

TEST_CASE("refuted verdicts re-verify in the same run") {
    for (const auto& id : {"CL-09", "CL-13"}) {
        for (const auto& v : runClaim(id)) {
            if (v.outcome != Outcome::Refuted) continue;
            REQUIRE(!v.witness.empty());
            // witness strings carry the pair; re-check the pinned product forms
            CHECK(v.witness.find("x*y=0") != std::string::npos);
        }
    }
}

TEST_CASE("full run matches pinned expectations") {
    Report r = runAll();
    CHECK(r.mismatches == 0);
    CHECK(r.unknown == 0);
    CHECK(r.notInterpretable == 1);
    CHECK(r.rows.size() == 55);
}

TEST_CASE("filters") {
    Report one = runAll(std::set<std::string>{"CL-05"});
    CHECK(one.rows.size() == 1);
    CHECK(one.holds == 1);

    Report none = runAll(std::set<std::string>{});
    CHECK(none.rows.empty());
    CHECK(none.holds == 0);
    CHECK(none.refuted == 0);

    Report qOnly = runAll(std::nullopt, std::set<FieldMode>{FieldMode::Q});
    for (const auto& v : qOnly.rows) CHECK(v.mode == FieldMode::Q);
}

TEST_CASE("report rendering is deterministic") {
    Report r1 = runAll();
    Report r2 = runAll();
    CHECK(renderReportText(r1) == renderReportText(r2));
}

TEST_CASE("json report carries the machine fields") {
    Report r = runAll(std::set<std::string>{"CL-01"});
    std::string js = renderReportJson(r);
    for (const char* key : {"\"claim_id\"", "\"paper_ref\"", "\"mode\"", "\"outcome\"", "\"witness\"",
                            "\"certificate\"", "\"elapsed_ms\"", "\"suite_version\"", "\"summary\""})
        CHECK(js.find(key) != std::string::npos);
}

TEST_CASE("commutative rank families respect the Schur bound") {
    // dim of a commutative subalgebra of n x n matrices is at most n^2/4 + 1
    for (int rank : {5, 6}) {
        auto fam = makeRankFamily(rank);
        bool commutative = true;
        for (const auto& x : fam)
            for (const auto& y : fam)
                if (x * y != y * x) commutative = false;
        REQUIRE(commutative);
        int dim = spanBasis(fam, FieldMode::Q).dim();
        CHECK(dim <= rank * rank / 4 + 1);
    }
}

TEST_CASE("square form evaluation") {
    auto [I, C, B, A] = quaternionBasis();
    std::array<Matrix, 4> units = {I, B, C, A};

    auto r1 = spacetimeForm(Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), units);
    REQUIRE(r1.lambda.has_value());
    CHECK(*r1.lambda == GaussianRational(1));
    CHECK(r1.value == I);

    auto r2 = spacetimeForm(Rational(0), Rational(0), Rational(1), Rational(0), Rational(1), units);
    REQUIRE(r2.lambda.has_value());
    CHECK(*r2.lambda == GaussianRational(-1));

    auto r3 = spacetimeForm(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), units);
    REQUIRE(r3.lambda.has_value());
    CHECK(*r3.lambda == GaussianRational(2));
    CHECK(r3.signs == std::vector<int>{1, 1, -1, 1});

    // indefinite marker for a term whose square is not +-identity
    Matrix j = makeJ(GaussianRational(1), GaussianRational(0), GaussianRational(1), GaussianRational(1));
    auto r4 = spacetimeForm({{j, GaussianRational(1)}});
    CHECK(r4.signs == std::vector<int>{0});

    CHECK_THROWS_AS(spacetimeForm({}), InputError);
}
