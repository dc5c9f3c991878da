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

#include "matfield/spec_io.hpp"
#include "oracle_helpers.hpp"

using namespace matfield;

namespace {
GaussianRational g(long n) { return GaussianRational(n); }
}

TEST_CASE("quaternion table holds verbatim") {
    auto [I, C, B, A] = quaternionBasis();
    CHECK(C * B == A);
    CHECK(B * C == -A);
    CHECK(A * C == B);
    CHECK(C * A == -B);
    CHECK(A * B == C);
    CHECK(B * A == -C);
    CHECK(C * C == -I);
    CHECK(B * B == I);
    CHECK(A * A == I);
    CHECK(A == C * B);
}

TEST_CASE("matrix arithmetic") {
    auto [I, C, B, A] = quaternionBasis();
    CHECK((I + C) * (I + C) == g(2) * C);
    CHECK(B * C == -A);
    Matrix wrongRank(3);
    CHECK_THROWS_AS(C * wrongRank, InputError);
    CHECK_THROWS_AS(C + wrongRank, InputError);
}

TEST_CASE("determinant examples and product law") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    CHECK(C.determinant() == g(1));
    CHECK((I + A).determinant().isZero());
    Matrix j = makeJ(g(1), g(1), g(1), g(1));
    CHECK(j == Matrix::fromRows({{g(2), g(1)}, {g(1), g(1)}}));
    CHECK(j.determinant() == g(1));

    oracle::TestRng rng(501);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        Matrix x = rng.matrix(n, true), y = rng.matrix(n, true);
        CHECK((x * y).determinant() == x.determinant() * y.determinant());
        CHECK(x.determinant() == oracle::laplaceDeterminant(x));
    }
}

TEST_CASE("inverse") {
    auto [I, C, B, A] = quaternionBasis();
    CHECK(C.inverse() == -C);
    CHECK(B.inverse() == B);
    CHECK_THROWS_AS((I + A).inverse(), SingularMatrixError);

    oracle::TestRng rng(502);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix x = rng.matrix(3, true);
        if (x.determinant().isZero()) continue;
        CHECK(x * x.inverse() == Matrix::identity(3));
        CHECK(x.inverse() * x == Matrix::identity(3));
    }
}

TEST_CASE("minimal polynomial") {
    auto [I, C, B, A] = quaternionBasis();
    (void)A;
    CHECK(C.minPoly(FieldMode::Q).str() == "t^2 + 1");
    CHECK(B.minPoly(FieldMode::Q).str() == "t^2 - 1");
    CHECK(I.minPoly(FieldMode::Q).str() == "t - 1");

    oracle::TestRng rng(503);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        Matrix x = rng.matrix(n, false);
        UniPoly mp = x.minPoly(FieldMode::Q);
        CHECK(evaluatePoly(mp, x, Matrix::identity(n)).isZero());
        auto [q, r] = polyDivmod(x.charPoly(FieldMode::Q), mp);
        (void)q;
        CHECK(r.isZero());
    }
}

TEST_CASE("diagonal and secondary-diagonal constructors") {
    auto dfam = makeDFamily();
    CHECK(makeDiag({g(1), g(-1), g(1)}) == dfam.D2);
    CHECK(makeAntidiag({g(1), g(1), g(1)}) == dfam.D1);
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    (void)C;
    (void)A;
    CHECK(makeAntidiag({g(1), g(1)}) == B);
    Matrix sq = makeAntidiag({g(-1), g(-1), g(1)});
    CHECK(sq * sq == makeDiag({g(-1), g(1), g(-1)}));
    CHECK_THROWS_AS(makeDiag({g(1)}), InputError);
}

TEST_CASE("sign families") {
    auto gfam = makeGFamily();
    CHECK(makeSignFamily(4, {{-1, 1, 1, -1}, SignPattern::Placement::MainDiagonal}) == gfam.G1);
    CHECK(makeSignFamily(4, {{-1, 1, 1, -1}, SignPattern::Placement::SecondaryDiagonal}) == gfam.G3);
    CHECK(makeSignFamily(5, {{1, 1, 1, 1, 1}, SignPattern::Placement::MainDiagonal}) ==
          Matrix::identity(5));
    CHECK_THROWS_AS(makeSignFamily(4, {{1, 1}, SignPattern::Placement::MainDiagonal}), InputError);
    CHECK_THROWS_AS(makeSignFamily(9, {std::vector<int>(9, 1), SignPattern::Placement::MainDiagonal}),
                    InputError);
}

TEST_CASE("parameterized rank-2 family") {
    CHECK(makeJ(g(0), g(3), g(2), g(5)) == Matrix::fromRows({{g(2), g(5)}, {g(15), g(2)}}));
    CHECK(makeJ(g(4), g(3), g(0), g(1)) == Matrix::fromRows({{g(4), g(1)}, {g(3), g(0)}}));
    CHECK(makeJ(g(1), g(0), g(1), g(1)) == Matrix::fromRows({{g(2), g(1)}, {g(0), g(1)}}));
}

TEST_CASE("ladder operators") {
    auto [I, C, B, A] = quaternionBasis();
    auto lad = makeLadder();
    GaussianRational half(Rational(1, 2));
    CHECK(lad.raise == Matrix::fromRows({{g(0), g(0)}, {g(1), g(0)}}));
    CHECK(lad.lower == Matrix::fromRows({{g(0), g(1)}, {g(0), g(0)}}));
    CHECK(lad.raise == half * (C + B));
    CHECK(lad.lower == half * (B - C));
    CHECK(lad.number == Matrix::fromRows({{g(0), g(0)}, {g(0), g(1)}}));
    CHECK(lad.raise * lad.lower == half * (I + A));
    CHECK(lad.lower * lad.raise == half * (I - A));
    CHECK(lad.raise * lad.lower + lad.lower * lad.raise == I);
    CHECK(lad.raise + lad.lower == B);
}

TEST_CASE("pauli matrices") {
    auto [sx, sy, sz] = makePauli();
    GaussianRational i = GaussianRational::i();
    CHECK(sx == Matrix::fromRows({{g(0), g(1)}, {g(1), g(0)}}));
    CHECK(sz == Matrix::fromRows({{g(1), g(0)}, {g(0), g(-1)}}));
    CHECK(sy == Matrix::fromRows({{g(0), -i}, {i, g(0)}}));
    CHECK(sx * sy == i * sz);
}

TEST_CASE("gamma matrices") {
    auto [g0, g1, g2, g3] = makeDirac();
    auto gfam = makeGFamily();
    CHECK(g2 == gfam.G3);
    CHECK(g0 * g0 == Matrix::identity(4));
    CHECK((g1 * g2 + g2 * g1).isZero());
    CHECK((g0 * g1 + g1 * g0).isZero());
    CHECK((g0 * g3 + g3 * g0).isZero());
    CHECK((g1 * g3 + g3 * g1).isZero());
    CHECK((g2 * g3 + g3 * g2).isZero());
}

TEST_CASE("vectorize") {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    CHECK(C.vectorize() == std::vector<GaussianRational>{g(0), g(-1), g(1), g(0)});
    CHECK(I.vectorize() == std::vector<GaussianRational>{g(1), g(0), g(0), g(1)});
    CHECK(Matrix(2).vectorize() == std::vector<GaussianRational>{g(0), g(0), g(0), g(0)});
}

TEST_CASE("power identities") {
    auto [I, C, B, A] = quaternionBasis();
    GaussianRational two(2);
    for (const Matrix& D : {I + B, I + A}) {
        for (int n = 2; n <= 6; ++n) {
            GaussianRational s(1);
            for (int k = 1; k < n; ++k) s *= two;
            CHECK(D.pow(n) == s * D);
        }
    }
    CHECK((I + C).pow(3) == two * (C - I));
    CHECK((I + C).pow(4) == g(-4) * I);
}

TEST_CASE("product shapes, exact symbolic samples") {
    oracle::TestRng rng(504);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<GaussianRational> a, b, b2;
            for (int k = 0; k < n; ++k) {
                a.push_back(rng.gaussian());
                b.push_back(rng.nonzeroGaussian());
                b2.push_back(rng.gaussian());
            }
            Matrix A = makeDiag(a), B = makeAntidiag(b), B2 = makeAntidiag(b2);
            // diag * antidiag is anti-diagonal with entries a_i b_i
            Matrix ab(n);
            for (int t = 0; t < n; ++t)
                ab.set(t, n - 1 - t, a[static_cast<size_t>(t)] * b[static_cast<size_t>(t)]);
            CHECK(A * B == ab);
            // antidiag * antidiag' is diagonal with entries b_i b'_{n+1-i}
            Matrix bb(n);
            for (int t = 0; t < n; ++t)
                bb.set(t, t, b[static_cast<size_t>(t)] * b2[static_cast<size_t>(n - 1 - t)]);
            CHECK(B * B2 == bb);

            // palindromic diagonal <=> commutes with an all-nonzero antidiagonal
            std::vector<GaussianRational> pal = a;
            for (int k = 0; k < n / 2; ++k) pal[static_cast<size_t>(n - 1 - k)] = pal[static_cast<size_t>(k)];
            Matrix P = makeDiag(pal);
            CHECK(P * B == B * P);
            bool palindrome = true;
            for (int k = 0; k < n; ++k)
                if (a[static_cast<size_t>(k)] != a[static_cast<size_t>(n - 1 - k)]) palindrome = false;
            CHECK((A * B == B * A) == palindrome);
        }
    }
}

TEST_CASE("matrix text form round-trips") {
    oracle::TestRng rng(505);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = rng.matrix(2 + static_cast<int>(rng.next() % 3), true);
        CHECK(parseMatrixLiteral(m.str()) == m);
    }
    CHECK(parseMatrixLiteral("[[0,-1],[1,0]]") == quaternionBasis().C);
    CHECK_THROWS_AS(parseMatrixLiteral("[[1,2],[3]]"), InputError);
}
