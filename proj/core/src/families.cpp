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

#include "matfield/families.hpp"

namespace matfield {

namespace {

std::vector<GaussianRational> signEntries(const std::vector<int>& signs) {
    std::vector<GaussianRational> out;
    out.reserve(signs.size());
    for (int s : signs) {
        if (s != 1 && s != -1) throw InputError("sign pattern entries must be +1 or -1");
        out.emplace_back(static_cast<long>(s));
    }
    return out;
}

} // namespace

QuaternionBasis quaternionBasis() {
    Matrix I = Matrix::identity(2);
    Matrix C = Matrix::fromRows({{GaussianRational(0), GaussianRational(-1)},
                                 {GaussianRational(1), GaussianRational(0)}});
    Matrix B = Matrix::fromRows({{GaussianRational(0), GaussianRational(1)},
                                 {GaussianRational(1), GaussianRational(0)}});
    Matrix A = C * B;   // diag(-1, 1)
    return {I, C, B, A};
}

Matrix makeDiag(const std::vector<GaussianRational>& entries) {
    int n = static_cast<int>(entries.size());
    if (n < 2) throw InputError("diagonal matrix needs at least two entries");
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, entries[static_cast<size_t>(i)]);
    return m;
}

Matrix makeAntidiag(const std::vector<GaussianRational>& entries) {
    int n = static_cast<int>(entries.size());
    if (n < 2) throw InputError("secondary-diagonal matrix needs at least two entries");
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, entries[static_cast<size_t>(i)]);
    return m;
}

Matrix makeSignFamily(int n, const SignPattern& pattern) {
    if (n < 2 || n > 8) throw InputError("sign families are provided for ranks 2..8");
    if (static_cast<int>(pattern.signs.size()) != n)
        throw InputError("sign pattern length does not match the requested rank");
    auto entries = signEntries(pattern.signs);
    return pattern.placement == SignPattern::Placement::MainDiagonal ? makeDiag(entries)
                                                                     : makeAntidiag(entries);
}

Matrix makeJ(const GaussianRational& h, const GaussianRational& k,
             const GaussianRational& d, const GaussianRational& b) {
    return Matrix::fromRows({{b * h + d, b}, {k * b, d}});
}

LadderOperators makeLadder() {
    auto [I, C, B, A] = quaternionBasis();
    GaussianRational half(Rational(1, 2));
    Matrix raise = half * (C + B);
    Matrix lower = half * (B - C);
    Matrix number = half * (I + A);
    Matrix antiNumber = half * (I - A);
    return {raise, lower, number, antiNumber};
}

PauliTriple makePauli() {
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    return {B, GaussianRational::i() * C, -A};
}

DiracGammas makeDirac() {
    auto [sx, sy, sz] = makePauli();
    auto block = [](const Matrix& s) {
        Matrix g(4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                g.set(i, 2 + j, s.at(i, j));
                g.set(2 + i, j, -s.at(i, j));
            }
        return g;
    };
    Matrix g0(4);
    g0.set(0, 0, GaussianRational(1));
    g0.set(1, 1, GaussianRational(1));
    g0.set(2, 2, GaussianRational(-1));
    g0.set(3, 3, GaussianRational(-1));
    Matrix g1 = block(sx);
    Matrix g2 = -GaussianRational::i() * block(sy);   // = antidiag(-1,1,1,-1), real
    Matrix g3 = block(sz);
    return {g0, g1, g2, g3};
}

DFamily makeDFamily() {
    GaussianRational one(1), neg(-1);
    return {Matrix::identity(3),
            makeAntidiag({one, one, one}),
            makeDiag({one, neg, one}),
            makeAntidiag({one, neg, one})};
}

D45Family makeD45Family() {
    GaussianRational one(1), neg(-1);
    return {Matrix::identity(3),
            makeDiag({one, neg, one}),
            makeAntidiag({one, one, neg}),
            makeAntidiag({one, neg, neg})};
}

GFamily makeGFamily() {
    GaussianRational one(1), neg(-1);
    return {Matrix::identity(4),
            makeDiag({neg, one, one, neg}),
            makeAntidiag({one, one, one, one}),
            makeAntidiag({neg, one, one, neg})};
}

std::vector<Matrix> makeRankFamily(int rank) {
    static const std::vector<std::vector<std::vector<int>>> patterns = {
        // rank 5
        {{1, 1, 1, 1, 1}, {-1, 1, 1, 1, -1}, {-1, -1, 1, -1, -1}, {1, -1, 1, -1, 1}},
        // rank 6
        {{1, 1, 1, 1, 1, 1}, {-1, 1, 1, 1, 1, -1}, {-1, -1, 1, 1, -1, -1}, {1, -1, 1, 1, -1, 1}},
        // rank 7
        {{1, 1, 1, 1, 1, 1, 1},
         {-1, 1, 1, 1, 1, 1, -1},
         {-1, -1, 1, 1, 1, -1, -1},
         {-1, -1, -1, 1, 1, -1, -1},
         {1, -1, -1, 1, 1, -1, -1},
         {1, -1, 1, -1, 1, -1, 1}},
        // rank 8
        {{1, 1, 1, 1, 1, 1, 1, 1},
         {-1, 1, 1, 1, 1, 1, 1, -1},
         {-1, -1, 1, 1, 1, 1, -1, -1},
         {-1, -1, -1, 1, 1, -1, -1, -1},
         {1, -1, -1, 1, 1, -1, -1, 1},
         {1, -1, 1, -1, 1, -1, 1, 1}},
    };
    if (rank < 5 || rank > 8) throw InputError("listed sign families exist for ranks 5..8");
    const auto& pats = patterns[static_cast<size_t>(rank - 5)];
    std::vector<Matrix> out;
    out.reserve(pats.size() * 2);
    for (const auto& p : pats) out.push_back(makeSignFamily(rank, {p, SignPattern::Placement::MainDiagonal}));
    for (const auto& p : pats) out.push_back(makeSignFamily(rank, {p, SignPattern::Placement::SecondaryDiagonal}));
    return out;
}

} // namespace matfield
