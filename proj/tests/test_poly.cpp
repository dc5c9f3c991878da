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

#include "matfield/poly.hpp"
#include "oracle_helpers.hpp"

using namespace matfield;

namespace {

GaussianRational g(long n) { return GaussianRational(n); }

UniPoly poly(std::vector<long> coeffs, FieldMode mode = FieldMode::Q) {
    std::vector<GaussianRational> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return UniPoly(std::move(cs), mode);
}

UniPoly randomPoly(oracle::TestRng& rng, int maxDeg, FieldMode mode) {
    int deg = static_cast<int>(rng.next() % static_cast<unsigned>(maxDeg + 1));
    std::vector<GaussianRational> cs;
    for (int k = 0; k <= deg; ++k) cs.push_back(rng.gaussian(modeScalarsComplex(mode)));
    return UniPoly(std::move(cs), mode);
}

} // namespace

TEST_CASE("divmod examples") {
    auto [q1, r1] = polyDivmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(q1 == poly({1, 1}));
    CHECK(r1.isZero());

    UniPoly t2p1({g(1), g(0), g(1)}, FieldMode::QI);
    UniPoly tmi({-GaussianRational::i(), g(1)}, FieldMode::QI);
    auto [q2, r2] = polyDivmod(t2p1, tmi);
    CHECK(q2 == UniPoly({GaussianRational::i(), g(1)}, FieldMode::QI));
    CHECK(r2.isZero());

    auto [q3, r3] = polyDivmod(poly({0, 1, 0, 1}), poly({0, 0, 1}));
    CHECK(q3 == poly({0, 1}));
    CHECK(r3 == poly({0, 1}));

    CHECK_THROWS_AS(polyDivmod(poly({1, 1}), UniPoly::zero(FieldMode::Q)), InputError);
}

TEST_CASE("divmod round-trip property") {
    oracle::TestRng rng(1234);
    for (FieldMode mode : {FieldMode::Q, FieldMode::QI}) {
        for (int trial = 0; trial < 60; ++trial) {
            UniPoly p = randomPoly(rng, 8, mode);
            UniPoly q = randomPoly(rng, 4, mode);
            if (q.isZero()) continue;
            auto [quot, rem] = polyDivmod(p, q);
            CHECK(q * quot + rem == p);
            CHECK(rem.degree() < q.degree());
        }
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefreePart(poly({0, 0, 1})) == poly({0, 1}));                       // t^2 -> t
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({1, 1});                     // (t-1)^2 (t+1)
    CHECK(squarefreePart(p) == poly({-1, 1}) * poly({1, 1}));
    CHECK(squarefreePart(poly({1, 0, 1})) == poly({1, 0, 1}));                    // already squarefree
    CHECK_THROWS_AS(squarefreePart(UniPoly::zero(FieldMode::Q)), InputError);
}

TEST_CASE("factor bounded: quadratics per mode") {
    CHECK(factorBounded(poly({1, 0, 1})).isIrreducible());   // t^2+1 over Q

    auto f = factorBounded(poly({-1, 0, 1}));                // t^2-1
    REQUIRE(f.isFactored());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == poly({-1, 1}));
    CHECK(f.factors[1].poly == poly({1, 1}));

    UniPoly t2p1qi({g(1), g(0), g(1)}, FieldMode::QI);
    auto fq = factorBounded(t2p1qi);
    REQUIRE(fq.isFactored());
    CHECK(fq.factors[0].poly == UniPoly({-GaussianRational::i(), g(1)}, FieldMode::QI));
    CHECK(fq.factors[1].poly == UniPoly({GaussianRational::i(), g(1)}, FieldMode::QI));

    CHECK(factorBounded(poly({-2, 0, 1})).isIrreducible());  // t^2-2 over Q
    auto fr = factorBounded(UniPoly({g(-2), g(0), g(1)}, FieldMode::QAsR));
    CHECK(fr.isFactored());
    CHECK(fr.existenceOnly);
    CHECK(fr.factors.empty());
    // t^2+1 stays irreducible over the real-closed semantics
    CHECK(factorBounded(UniPoly({g(1), g(0), g(1)}, FieldMode::QAsR)).isIrreducible());
    // ... but never over the algebraically closed ones
    auto fc = factorBounded(UniPoly({g(-2), g(0), g(1)}, FieldMode::QIAsC));
    CHECK(fc.outcome == FactorAnswer::Outcome::Unknown);
    CHECK(fc.reason == "roots outside Q(i)");
}

TEST_CASE("factor bounded: input validation and caps") {
    CHECK_THROWS_AS(factorBounded(poly({1, 2})), InputError);     // not monic
    CHECK_THROWS_AS(factorBounded(poly({5})), InputError);        // constant
    auto big = factorBounded(poly({1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), 8);
    CHECK(big.outcome == FactorAnswer::Outcome::Unknown);
    CHECK(big.reason == "degree exceeds cap");
}

TEST_CASE("factor bounded: multiplicities and Kronecker factors") {
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({1, 1});     // (t-1)^2 (t+1)
    auto f = factorBounded(p);
    REQUIRE(f.isFactored());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == poly({-1, 1}));
    CHECK(f.factors[0].multiplicity == 2);
    CHECK(f.factors[1].multiplicity == 1);

    // no rational roots: (t^2+1)(t^2+2) needs the degree-2 interpolation search
    auto k = factorBounded(poly({1, 0, 1}) * poly({2, 0, 1}));
    REQUIRE(k.isFactored());
    REQUIRE(k.factors.size() == 2);
    CHECK(k.factors[0].poly == poly({1, 0, 1}));
    CHECK(k.factors[1].poly == poly({2, 0, 1}));

    // t^4 + 4 = (t^2-2t+2)(t^2+2t+2)
    auto t44 = factorBounded(poly({4, 0, 0, 0, 1}));
    REQUIRE(t44.isFactored());
    REQUIRE(t44.factors.size() == 2);
    CHECK(t44.factors[0].poly == poly({2, -2, 1}));
    CHECK(t44.factors[1].poly == poly({2, 2, 1}));

    // irreducible quartic: t^4 + t + 1 (no roots, no quadratic split over Q)
    CHECK(factorBounded(poly({1, 1, 0, 0, 1})).isIrreducible());

    // t^4+1 splits over Q(i) into two quadratics
    UniPoly t4p1({g(1), g(0), g(0), g(0), g(1)}, FieldMode::QI);
    auto fqi = factorBounded(t4p1);
    REQUIRE(fqi.isFactored());
    CHECK(fqi.factors.size() == 2);
}

TEST_CASE("factored answers multiply back (property)") {
    oracle::TestRng rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        // build a product of small monic factors, then refactor it
        UniPoly p = poly({1});
        int parts = 1 + static_cast<int>(rng.next() % 3);
        for (int k = 0; k < parts; ++k) {
            long root = static_cast<long>(rng.next() % 7) - 3;
            p = p * poly({-root, 1});
        }
        auto f = factorBounded(p);
        if (!f.hasConcreteFactors()) continue;
        UniPoly back = poly({1});
        for (const auto& [factor, mult] : f.factors) {
            CHECK(factor.isMonic());
            CHECK(factor.degree() >= 1);
            for (int k = 0; k < mult; ++k) back = back * factor;
        }
        CHECK(back == p);
    }
}

TEST_CASE("irreducible quadratics have non-square discriminants") {
    oracle::TestRng rng(888);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly p({rng.gaussian(false), rng.gaussian(false), GaussianRational(1)}, FieldMode::Q);
        auto f = factorBounded(p);
        GaussianRational disc = p.coeff(1) * p.coeff(1) - GaussianRational(4) * p.coeff(0);
        bool hasRoot = squareTest(disc, FieldMode::Q).hasRoot();
        if (f.isIrreducible()) CHECK(!hasRoot);
        if (f.hasConcreteFactors() && f.factors.front().poly.degree() == 1) CHECK(hasRoot);
    }
}

TEST_CASE("polynomial rendering") {
    CHECK(poly({1, 0, 1}).str() == "t^2 + 1");
    CHECK(poly({-1, 0, 1}).str() == "t^2 - 1");
    CHECK(poly({2, -2, 1}).str() == "t^2 - 2*t + 2");
    CHECK(poly({0, 1}).str() == "t");
    CHECK(UniPoly::zero(FieldMode::Q).str() == "0");
}
