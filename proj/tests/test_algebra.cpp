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

#include "matfield/algebra.hpp"
#include "oracle_helpers.hpp"

using namespace matfield;

namespace {

GaussianRational g(long n) { return GaussianRational(n); }

AlgebraSpec spec(std::vector<Matrix> gens, FieldMode mode = FieldMode::Q,
                 Bracket bracket = Bracket::Mul) {
    return {"test", std::move(gens), mode, bracket};
}

/// Left-regular 4x4 rational representation of the Hamilton quaternions.
std::pair<Matrix, Matrix> hamiltonGenerators() {
    Matrix i = Matrix::fromRows({{g(0), g(-1), g(0), g(0)},
                                 {g(1), g(0), g(0), g(0)},
                                 {g(0), g(0), g(0), g(-1)},
                                 {g(0), g(0), g(1), g(0)}});
    Matrix j = Matrix::fromRows({{g(0), g(0), g(-1), g(0)},
                                 {g(0), g(0), g(0), g(1)},
                                 {g(1), g(0), g(0), g(0)},
                                 {g(0), g(-1), g(0), g(0)}});
    return {i, j};
}

} // namespace

TEST_CASE("span basis") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    CHECK(spanBasis({I, C, g(2) * C}, FieldMode::Q).dim() == 2);
    CHECK(spanBasis({}, FieldMode::Q).dim() == 0);
    CHECK(spanBasis(makeRankFamily(5), FieldMode::Q).dim() == 5);

    // agreement with the independent elimination oracle
    for (int rank = 5; rank <= 8; ++rank) {
        auto fam = makeRankFamily(rank);
        CHECK(spanBasis(fam, FieldMode::Q).dim() == oracle::spanRankOracle(fam, FieldMode::Q));
    }
}

TEST_CASE("span basis idempotence and canonical form") {
    oracle::TestRng rng(601);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> gens;
        int count = 1 + static_cast<int>(rng.next() % 4);
        for (int k = 0; k < count; ++k) gens.push_back(rng.matrix(3, trial % 2 == 0));
        FieldMode mode = trial % 2 == 0 ? FieldMode::QI : FieldMode::Q;
        Basis b1 = spanBasis(gens, mode);
        Basis b2 = spanBasis(b1.elements(), mode);
        REQUIRE(b1.dim() == b2.dim());
        for (int k = 0; k < b1.dim(); ++k) CHECK(b1.element(k) == b2.element(k));
        // pivot coordinates normalized to 1 and exclusive
        for (int k = 0; k < b1.dim(); ++k) {
            auto coords = modeCoords(b1.element(k), mode);
            CHECK(coords[static_cast<size_t>(b1.pivotPositions()[static_cast<size_t>(k)])] == g(1));
            for (int other = 0; other < b1.dim(); ++other) {
                if (other == k) continue;
                CHECK(coords[static_cast<size_t>(b1.pivotPositions()[static_cast<size_t>(other)])].isZero());
            }
        }
    }
}

TEST_CASE("closure") {
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    auto mul = closeUnder(spec({C, B}));
    CHECK(mul.closed);
    CHECK(mul.basis.dim() == 4);

    auto comm = closeUnder(spec({C, B, A}, FieldMode::Q, Bracket::Commutator));
    CHECK(comm.closed);
    CHECK(comm.basis.dim() == 3);

    auto anti = closeUnder(spec({C, B}, FieldMode::Q, Bracket::Anticommutator));
    CHECK(anti.closed);
    CHECK(anti.basis.dim() == 3);
    CHECK(anti.basis.contains(Matrix::identity(2)));

    // every closure is actually closed: all pairwise brackets reduce
    const std::vector<std::pair<const ClosureResult*, Bracket>> results = {
        {&mul, Bracket::Mul}, {&comm, Bracket::Commutator}, {&anti, Bracket::Anticommutator}};
    for (const auto& [result, br] : results) {
        for (int i = 0; i < result->basis.dim(); ++i)
            for (int j = 0; j < result->basis.dim(); ++j)
                CHECK(result->basis.contains(applyBracket(br, result->basis.element(i),
                                                          result->basis.element(j))));
    }
}

TEST_CASE("closure caps") {
    auto [g0, g1, g2, g3] = makeDirac();
    auto capped = closeUnder(spec({g0, g1, g2, g3}, FieldMode::QI), 8, 8);
    CHECK(!capped.closed);
    CHECK(capped.escaped.has_value());
    CHECK(capped.basis.dim() > 0);
    auto roundCapped = closeUnder(spec({g0, g1, g2, g3}, FieldMode::QI), 64, 1);
    CHECK(!roundCapped.closed);
    CHECK_THROWS_AS(closeUnder(spec({g0}), 0, 1), InputError);
    CHECK_THROWS_AS(closeUnder(spec({})), InputError);
}

TEST_CASE("structure constants") {
    auto [I, C, B, A] = quaternionBasis();
    Basis q = spanBasis({I, C, B, A}, FieldMode::Q);
    StructureConstants table = structureConstants(q, Bracket::Mul);
    // reconstruction identity: bracket(b_i, b_j) = sum_k c_k b_k exactly
    for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < q.dim(); ++j)
            CHECK(q.combine(table.at(i, j)) == q.element(i) * q.element(j));
    // the table encodes CB = A: reduce both and compare coefficients
    CHECK(q.reduce(C * B).coeffs == q.reduce(A).coeffs);

    auto dfam = makeDFamily();
    Basis d = spanBasis({dfam.I, dfam.D1, dfam.D2, dfam.D3}, FieldMode::Q);
    CHECK(d.reduce(dfam.D1 * dfam.D2).coeffs == d.reduce(dfam.D3).coeffs);

    auto lad = makeLadder();
    Basis nb = spanBasis({I, lad.raise}, FieldMode::Q);
    StructureConstants nt = structureConstants(nb, Bracket::Mul);
    // raise^2 = 0: the (raise, raise) entry is the zero vector
    CHECK(nb.element(1) == lad.raise);
    for (const auto& c : nt.at(1, 1)) CHECK(c.isZero());

    // non-closed basis is rejected with a NotInSpan witness
    Basis justC = spanBasis({C}, FieldMode::Q);
    CHECK_THROWS_AS(structureConstants(justC, Bracket::Anticommutator), NotClosedError);
    try {
        structureConstants(justC, Bracket::Anticommutator);
    } catch (const NotClosedError& e) {
        CHECK(e.witness().kind == Witness::Kind::NotInSpan);
        CHECK(e.witness().x.has_value());
    }
}

TEST_CASE("unit element") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    auto u1 = findUnit(spanBasis({I, C}, FieldMode::Q));
    REQUIRE(u1.has_value());
    CHECK(*u1 == I);

    Matrix e22(2);
    e22.set(1, 1, g(1));
    auto u2 = findUnit(spanBasis({e22}, FieldMode::Q));
    REQUIRE(u2.has_value());
    CHECK(*u2 == e22);

    auto lad = makeLadder();
    CHECK(!findUnit(spanBasis({lad.raise}, FieldMode::Q)).has_value());
}

TEST_CASE("commutativity") {
    auto [I, C, B, A] = quaternionBasis();
    auto r1 = isCommutative(spanBasis({I, C, B, A}, FieldMode::Q));
    CHECK(!r1.commutative);
    REQUIRE(r1.witness.has_value());
    CHECK(verifyNoncommuting(spanBasis({I, C, B, A}, FieldMode::Q), *r1.witness));

    auto dfam = makeDFamily();
    CHECK(isCommutative(spanBasis({dfam.I, dfam.D1, dfam.D2, dfam.D3}, FieldMode::Q)).commutative);

    auto gfam = makeGFamily();
    CHECK(isCommutative(spanBasis({gfam.I, gfam.G1, gfam.G2, gfam.G3}, FieldMode::Q)).commutative);
}

TEST_CASE("radical") {
    auto [I, C, B, A] = quaternionBasis();
    (void)A;
    auto lad = makeLadder();
    Basis nb = spanBasis({I, lad.raise}, FieldMode::Q);
    Basis rad = radical(nb);
    CHECK(rad.dim() == 1);
    CHECK(rad.contains(lad.raise));
    CHECK(radical(spanBasis({I, C}, FieldMode::Q)).dim() == 0);
    CHECK(radical(spanBasis({I, B}, FieldMode::Q)).dim() == 0);
}

TEST_CASE("zero divisor search") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    Basis ia = spanBasis({I, A}, FieldMode::Q);
    auto w1 = findZeroDivisor(ia);
    REQUIRE(w1.has_value());
    CHECK(verifyZeroDivisor(ia, *w1));

    Basis icqi = spanBasis({I, C}, FieldMode::QI);
    auto w2 = findZeroDivisor(icqi);
    REQUIRE(w2.has_value());
    CHECK(verifyZeroDivisor(icqi, *w2));

    Basis icq = spanBasis({I, C}, FieldMode::Q);
    CHECK(!findZeroDivisor(icq).has_value());

    // nilpotent algebras yield witnesses from the radical even without a unit
    Basis nil = spanBasis({makeLadder().raise}, FieldMode::Q);
    auto w3 = findZeroDivisor(nil);
    REQUIRE(w3.has_value());
    CHECK(verifyZeroDivisor(nil, *w3));
}

TEST_CASE("division certification") {
    auto [I, C, B, A] = quaternionBasis();
    (void)A;
    EngineCaps caps;

    auto dc = certifyDivision(spanBasis({I, C}, FieldMode::Q), caps);
    REQUIRE(dc.status == DivisionResult::Status::Yes);
    REQUIRE(dc.certificate.has_value());
    CHECK(dc.certificate->kind == Certificate::Kind::PrimitiveElement);
    CHECK(verifyCertificate(spanBasis({I, C}, FieldMode::Q), *dc.certificate, caps));

    auto db = certifyDivision(spanBasis({I, B}, FieldMode::Q), caps);
    REQUIRE(db.status == DivisionResult::Status::No);
    REQUIRE(db.witness.has_value());
    CHECK((*db.witness->x * *db.witness->y).isZero());

    Matrix e22(2);
    e22.set(1, 1, g(1));
    auto d1 = certifyDivision(spanBasis({e22}, FieldMode::Q), caps);
    REQUIRE(d1.status == DivisionResult::Status::Yes);
    CHECK(d1.certificate->kind == Certificate::Kind::DimOne);

    // the genuine Hamilton quaternions in their rational 4x4 representation
    auto [hi, hj] = hamiltonGenerators();
    Classification hcls = classify(spec({Matrix::identity(4), hi, hj}));
    CHECK(hcls.closed);
    CHECK(hcls.closureDim == 4);
    CHECK(!hcls.commutative);
    REQUIRE(hcls.division.status == DivisionResult::Status::Yes);
    CHECK(hcls.division.certificate->kind == Certificate::Kind::QuaternionNormForm);
    CHECK(verifyCertificate(hcls.basis, *hcls.division.certificate, caps));
    CHECK(!hcls.field);   // division ring, not a field
    CHECK(hcls.zeroDivisors == TriState::No);
}

TEST_CASE("classification examples") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;

    Classification f = classify(spec({I, C}));
    CHECK(f.closed);
    CHECK(f.field);
    CHECK(f.commutative);
    CHECK(f.zeroDivisors == TriState::No);

    auto gfam = makeGFamily();
    Classification gcls = classify(spec({gfam.I, gfam.G1, gfam.G2, gfam.G3}));
    CHECK(gcls.closed);
    CHECK(gcls.commutative);
    CHECK(gcls.zeroDivisors == TriState::Yes);
    CHECK(!gcls.field);
    REQUIRE(gcls.zeroDivisorWitness.has_value());
    CHECK(verifyZeroDivisor(gcls.basis, *gcls.zeroDivisorWitness));

    Matrix j = makeJ(g(1), g(2), g(3), g(1));
    Classification jcls = classify(spec({Matrix::identity(2), j}));
    CHECK(jcls.closed);
    CHECK(jcls.closureDim <= 2);
    CHECK(jcls.commutative);

    // the full unit span is the split form of the quaternions: B^2 = A^2 = I
    // makes it the whole 2x2 matrix algebra, with zero divisors, so it is a
    // ring but not a division ring
    auto full = quaternionBasis();
    Classification split = classify(spec({full.I, full.C, full.B, full.A}));
    CHECK(split.closed);
    CHECK(split.closureDim == 4);
    CHECK(!split.commutative);
    CHECK(split.zeroDivisors == TriState::Yes);
    CHECK(split.division.status == DivisionResult::Status::No);
    CHECK(!split.field);
    CHECK((full.I + full.B) * (full.I - full.B) == Matrix(2));

    CHECK_THROWS_AS(classify(spec({C}, FieldMode::Q, Bracket::Commutator)), InputError);
}

TEST_CASE("grid oracle agreement, dims <= 3") {
    auto [I, C, B, A] = quaternionBasis();
    auto lad = makeLadder();
    std::vector<std::vector<Matrix>> algebras = {
        {I, C}, {I, B}, {I, A}, {I, lad.raise}, {Matrix::identity(3), makeDFamily().D2}};
    for (const auto& gens : algebras) {
        Classification cls = classify(spec(gens));
        REQUIRE(cls.closed);
        auto grid = oracle::gridZeroDivisor(cls.basis.elements());
        if (grid) {
            // grid witness => classifier must not certify absence
            CHECK(cls.zeroDivisors != TriState::No);
            CHECK((grid->first * grid->second).isZero());
        }
        if (cls.zeroDivisorWitness) {
            CHECK((*cls.zeroDivisorWitness->x * *cls.zeroDivisorWitness->y).isZero());
        }
    }
}

TEST_CASE("single-generator rank-2 algebras close at dim <= 2") {
    // Cayley-Hamilton: {I, J} closes at dim <= 2 for any 2x2 J
    oracle::TestRng rng(602);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Matrix j = makeJ(rng.gaussian(false), rng.gaussian(false), rng.gaussian(false),
                         rng.gaussian(false));
        auto closure = closeUnder(spec({Matrix::identity(2), j}));
        CHECK(closure.closed);
        CHECK(closure.basis.dim() <= 2);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("witness budget exhaustion is honest") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    EngineCaps tiny;
    tiny.witnessBudget = 1;
    CHECK(!findZeroDivisor(spanBasis({I, C}, FieldMode::Q), tiny).has_value());
    auto r = certifyDivision(spanBasis({I, C}, FieldMode::Q), tiny);
    // with only one candidate the primitive element may not be reached
    CHECK(r.status != DivisionResult::Status::No);
}
