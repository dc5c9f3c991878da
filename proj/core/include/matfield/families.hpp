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

#ifndef MATFIELD_FAMILIES_HPP
#define MATFIELD_FAMILIES_HPP

#include <vector>

#include "matfield/matrix.hpp"

namespace matfield {

/// The rank-2 unit system: I the identity, C^2 = -I, B^2 = I, A = CB with
/// A^2 = I. C plays the imaginary unit, B the split unit, A their product.
struct QuaternionBasis {
    Matrix I, C, B, A;
};
QuaternionBasis quaternionBasis();

/// Main diagonal matrix from the given entries.
Matrix makeDiag(const std::vector<GaussianRational>& entries);

/// Secondary-diagonal matrix: entry b_i at row i, column n+1-i, so the first
/// entry sits top-right.
Matrix makeAntidiag(const std::vector<GaussianRational>& entries);

struct SignPattern {
    enum class Placement { MainDiagonal, SecondaryDiagonal };
    std::vector<int> signs;      // +1 / -1
    Placement placement = Placement::MainDiagonal;
};

/// +-1 pattern on the requested diagonal, zeros elsewhere; 2 <= n <= 8.
Matrix makeSignFamily(int n, const SignPattern& pattern);

/// The 2x2 family [[bh+d, b], [kb, d]].
Matrix makeJ(const GaussianRational& h, const GaussianRational& k,
             const GaussianRational& d, const GaussianRational& b);

/// Ladder operators: raise = (C+B)/2, lower = (B-C)/2, number = raise*lower'
/// companions (I+A)/2 and (I-A)/2.
struct LadderOperators {
    Matrix raise, lower, number, antiNumber;
};
LadderOperators makeLadder();

/// Pauli matrices in terms of the rank-2 units: sx = B, sy = iC, sz = -A.
struct PauliTriple {
    Matrix sx, sy, sz;
};
PauliTriple makePauli();

/// Gamma matrices with entries in Q(i): g0 = diag(1,1,-1,-1) and spatial
/// gammas in Pauli block form. g2 is pinned to the real secondary-diagonal
/// matrix antidiag(-1,1,1,-1) (the textbook block form times -i), so the
/// identification against the rank-4 sign family holds entrywise; all pairs
/// anticommute and the generated ring has dimension 16.
struct DiracGammas {
    Matrix g0, g1, g2, g3;
};
DiracGammas makeDirac();

/// Rank-3 commuting family: I, D1 = antidiag(1,1,1), D2 = diag(1,-1,1),
/// D3 = antidiag(1,-1,1); D1*D2 = D3 cyclically.
struct DFamily {
    Matrix I, D1, D2, D3;
};
DFamily makeDFamily();

/// Rank-3 commuting family: I, D2 = diag(1,-1,1), D4 = antidiag(1,1,-1),
/// D5 = antidiag(1,-1,-1).
struct D45Family {
    Matrix I, D2, D4, D5;
};
D45Family makeD45Family();

/// Rank-4 commuting family: I, G1 = diag(-1,1,1,-1), G2 = antidiag(1,1,1,1),
/// G3 = antidiag(-1,1,1,-1).
struct GFamily {
    Matrix I, G1, G2, G3;
};
GFamily makeGFamily();

/// The listed sign families of rank 5..8: each main-diagonal pattern together
/// with the same pattern on the secondary diagonal (8 matrices for ranks 5
/// and 6, 12 for ranks 7 and 8).
std::vector<Matrix> makeRankFamily(int rank);

} // namespace matfield

#endif
