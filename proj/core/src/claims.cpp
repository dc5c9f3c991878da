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

#include "matfield/claims.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

namespace matfield {

std::string_view outcomeName(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "HOLDS";
        case Outcome::Refuted: return "REFUTED";
        case Outcome::Unknown: return "UNKNOWN";
        case Outcome::NotInterpretable: return "NOT_INTERPRETABLE";
    }
    return "?";
}

namespace {

CheckResult holds(std::string detail, std::string certificate = "") {
    return {Outcome::Holds, std::move(detail), "", std::move(certificate)};
}
CheckResult refuted(std::string detail, std::string witness) {
    return {Outcome::Refuted, std::move(detail), std::move(witness), ""};
}
CheckResult unknown(std::string detail) { return {Outcome::Unknown, std::move(detail), "", ""}; }

/// All-or-nothing identity bundle; a failure surfaces as Refuted with the
/// failing identity named.
CheckResult verifyIdentities(const std::vector<std::pair<std::string, bool>>& items,
                             const std::string& okDetail) {
    for (const auto& [name, ok] : items)
        if (!ok) return refuted("identity failed: " + name, name);
    return holds(okDetail);
}

// Deterministic generator for exact sample entries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational() {
        long num = static_cast<long>(next() % 19) - 9;
        long den = static_cast<long>(next() % 4) + 1;
        return Rational(num, den);
    }
    Rational nonzeroRational() {
        while (true) {
            Rational r = rational();
            if (!r.isZero()) return r;
        }
    }
    GaussianRational gaussian(bool complexScalars) {
        Rational re = rational();
        Rational im = complexScalars ? rational() : Rational(0);
        return {re, im};
    }
    GaussianRational nonzeroGaussian(bool complexScalars) {
        while (true) {
            GaussianRational g = gaussian(complexScalars);
            if (!g.isZero()) return g;
        }
    }

private:
    std::uint64_t state_;
};

std::string tupleStr(long h, long k, long d, long b) {
    std::ostringstream os;
    os << "(h,k,d,b)=(" << h << "," << k << "," << d << "," << b << ")";
    return os.str();
}

/// First 100 parameter tuples of the rank-2 family grid, lexicographic over
/// {-2,-1,0,1,2}^4.
const std::vector<std::array<long, 4>>& jGrid() {
    static const std::vector<std::array<long, 4>> grid = [] {
        std::vector<std::array<long, 4>> out;
        const long vals[5] = {-2, -1, 0, 1, 2};
        for (long h : vals)
            for (long k : vals)
                for (long d : vals)
                    for (long b : vals) {
                        if (out.size() == 100) return out;
                        out.push_back({h, k, d, b});
                    }
        return out;
    }();
    return grid;
}

AlgebraSpec makeSpec(std::string name, std::vector<Matrix> gens, FieldMode mode) {
    return AlgebraSpec{std::move(name), std::move(gens), mode, Bracket::Mul};
}

/// The family is claimed to be a field; the pinned truth is a refutation.
/// When a pinned witness pair is supplied it is re-verified directly;
/// otherwise the classifier's own witness is used.
CheckResult refuteFieldClaim(const std::string& famName, std::vector<Matrix> gens, FieldMode mode,
                             const EngineCaps& caps,
                             std::optional<std::pair<Matrix, Matrix>> pinned = std::nullopt,
                             std::string note = "") {
    Classification cls = classify(makeSpec(famName, std::move(gens), mode), caps);
    if (!cls.closed) return unknown(famName + ": closure cap exceeded");
    if (cls.field) return unknown(famName + ": classifier certified a field against the pinned refutation");
    std::optional<Witness> w;
    if (pinned) {
        Witness cand{Witness::Kind::ZeroDivisor, pinned->first, pinned->second, 0};
        if (!verifyZeroDivisor(cls.basis, cand))
            return unknown(famName + ": pinned witness failed re-verification");
        w = cand;
    } else if (cls.division.status == DivisionResult::Status::No && cls.division.witness) {
        w = cls.division.witness;
    } else if (cls.noncommutingWitness) {
        w = cls.noncommutingWitness;
    }
    if (!w) return unknown(famName + ": no witness found within budget");
    std::ostringstream detail;
    detail << famName << " is not a field (closure dim " << cls.closureDim
           << (cls.commutative ? ", commutative" : ", noncommutative") << ")";
    if (!note.empty()) detail << "; " << note;
    return refuted(detail.str(), w->str());
}

/// The family is claimed to be a field and the claim is pinned true.
CheckResult confirmFieldClaim(const std::string& famName, std::vector<Matrix> gens, FieldMode mode,
                              const EngineCaps& caps) {
    Classification cls = classify(makeSpec(famName, std::move(gens), mode), caps);
    if (!cls.closed) return unknown(famName + ": closure cap exceeded");
    if (cls.field && cls.division.certificate) {
        std::ostringstream detail;
        detail << famName << " is a field of dim " << cls.closureDim;
        return holds(detail.str(), cls.division.certificate->str());
    }
    if (cls.division.status == DivisionResult::Status::No && cls.division.witness)
        return refuted(famName + ": field claim fails", cls.division.witness->str());
    return unknown(famName + ": division undecided within budget");
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

CheckResult checkQuaternionTable(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    return verifyIdentities({{"CB=A", C * B == A},
                             {"BC=-A", B * C == -A},
                             {"AC=B", A * C == B},
                             {"CA=-B", C * A == -B},
                             {"AB=C", A * B == C},
                             {"BA=-C", B * A == -C}},
                            "all six table products hold exactly");
}

CheckResult checkQuaternionRing(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    auto closure = closeUnder(makeSpec("span{I,C,B,A}", {I, C, B, A}, mode), caps);
    if (closure.closed && closure.basis.dim() == 4)
        return holds("span{I,C,B,A} closes at dim 4 under multiplication (a ring)");
    return refuted("span{I,C,B,A} did not close at dim 4",
                   closure.escaped ? closure.escaped->str() : "");
}

CheckResult checkQuaternionDivisionRing(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    Classification cls = classify(makeSpec("span{I,C,B,A}", {I, C, B, A}, mode), caps);
    Witness pinned{Witness::Kind::ZeroDivisor, I + B, I - B, 0};
    if (!verifyZeroDivisor(cls.basis, pinned))
        return unknown("pinned witness (I+B)(I-B)=0 failed re-verification");
    if (cls.division.status == DivisionResult::Status::Yes)
        return unknown("classifier certified division against the pinned refutation");
    return refuted("the unit span is the full 2x2 matrix algebra, not a division ring: B^2=I makes "
                   "(I+B)(I-B)=0",
                   pinned.str());
}

CheckResult checkUnitSquares(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    return verifyIdentities({{"C^2=-I", C * C == -I},
                             {"B^2=I", B * B == I},
                             {"A^2=I", A * A == I},
                             {"A=CB", A == C * B},
                             {"BC=-A", B * C == -A}},
                            "unit squares and the product definition hold exactly");
}

CheckResult checkHigherRankSquares(FieldMode, const EngineCaps&) {
    std::vector<std::pair<std::string, bool>> items;
    for (int n = 3; n <= 8; ++n) {
        std::vector<GaussianRational> ones(static_cast<size_t>(n), GaussianRational(1));
        Matrix B = makeAntidiag(ones);
        items.emplace_back("antidiag(1..1)^2=I rank " + std::to_string(n),
                           B * B == Matrix::identity(n));
        for (int lead = 1; lead < n; ++lead) {
            std::vector<GaussianRational> pat(static_cast<size_t>(n), GaussianRational(1));
            for (int k = 0; k < lead; ++k) pat[static_cast<size_t>(k)] = GaussianRational(-1);
            Matrix A = makeDiag(pat);
            items.emplace_back("diag sign pattern squares to I rank " + std::to_string(n),
                               A * A == Matrix::identity(n));
            Matrix Cn = makeAntidiag(pat);
            // square of an antidiagonal: diagonal with entries b_i * b_{n+1-i}
            Matrix expect(n);
            for (int t = 0; t < n; ++t)
                expect.set(t, t, pat[static_cast<size_t>(t)] * pat[static_cast<size_t>(n - 1 - t)]);
            items.emplace_back("antidiag sign pattern square shape rank " + std::to_string(n),
                               Cn * Cn == expect);
        }
    }
    GaussianRational one(1), neg(-1);
    Matrix m1 = makeAntidiag({neg, neg, one});
    Matrix m2 = makeAntidiag({neg, one, one});
    Matrix d = makeDiag({neg, one, neg});
    items.emplace_back("antidiag(-1,-1,1)^2 = diag(-1,1,-1)", m1 * m1 == d);
    items.emplace_back("antidiag(-1,1,1)^2 = diag(-1,1,-1)", m2 * m2 == d);
    return verifyIdentities(items, "square identities hold for ranks 3..8, including the displayed "
                                   "mixed-sign pair antidiag(-1,-1,1)^2 = diag(-1,1,-1) = antidiag(-1,1,1)^2");
}

CheckResult checkCombinations(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    GaussianRational zero(0), one(1), neg(-1), two(2);
    Matrix ipc = Matrix::fromRows({{one, neg}, {one, one}});
    Matrix ipb = Matrix::fromRows({{one, one}, {one, one}});
    Matrix ipa = Matrix::fromRows({{zero, zero}, {zero, two}});
    Matrix cpb = Matrix::fromRows({{zero, zero}, {two, zero}});
    Matrix e22(2), e21(2);
    e22.set(1, 1, one);
    e21.set(1, 0, one);
    return verifyIdentities({{"I+C", I + C == ipc},
                             {"I+B", I + B == ipb},
                             {"I+A=2I22", I + A == ipa && I + A == two * e22},
                             {"C+B=2I21", C + B == cpb && C + B == two * e21}},
                            "all four displayed combinations match, including the elementary-matrix forms");
}

CheckResult checkPowerIdentities(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    GaussianRational two(2);
    std::vector<std::pair<std::string, bool>> items = {
        {"(I+C)^2=2C", (I + C) * (I + C) == two * C},
        {"(I+B)^2=2(I+B)", (I + B) * (I + B) == two * (I + B)},
        {"(I+A)^2=2(I+A)", (I + A) * (I + A) == two * (I + A)},
        {"(I+C)^3=2(C-I)", (I + C).pow(3) == two * (C - I)},
        {"(I+C)^4=-4I", (I + C).pow(4) == GaussianRational(-4) * I},
    };
    for (const auto& [name, D] : {std::pair<std::string, Matrix>{"I+B", I + B}, {"I+A", I + A}}) {
        for (int n = 2; n <= 6; ++n) {
            GaussianRational scale(1);
            for (int k = 1; k < n; ++k) scale *= two;
            items.emplace_back("(" + name + ")^" + std::to_string(n) + "=2^(n-1)(" + name + ")",
                               (D).pow(n) == scale * D);
        }
    }
    return verifyIdentities(items, "all power identities hold exactly");
}

CheckResult checkLadder(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    auto [raise, lower, number, antiNumber] = makeLadder();
    GaussianRational zero(0), one(1), half(Rational(1, 2));
    Matrix raiseExpect = Matrix::fromRows({{zero, zero}, {one, zero}});
    Matrix lowerExpect = Matrix::fromRows({{zero, one}, {zero, zero}});
    Matrix numberExpect = Matrix::fromRows({{zero, zero}, {zero, one}});
    return verifyIdentities({{"raise=(C+B)/2", raise == half * (C + B) && raise == raiseExpect},
                             {"lower=(B-C)/2", lower == half * (B - C) && lower == lowerExpect},
                             {"raise*lower... number=(I+A)/2",
                              raise * lower == half * (I + A) && raise * lower == number &&
                                  number == numberExpect},
                             {"lower*raise=(I-A)/2", lower * raise == half * (I - A) && lower * raise == antiNumber},
                             {"number+antiNumber=I", raise * lower + lower * raise == I},
                             {"raise+lower=B", raise + lower == B}},
                            "ladder operator identities hold exactly");
}

CheckResult checkProductShapes(FieldMode mode, const EngineCaps&) {
    const bool complexScalars = modeScalarsComplex(mode);
    SampleRng rng(0x5eed0001ULL);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<GaussianRational> a, a2, b, b2;
            for (int k = 0; k < n; ++k) {
                a.push_back(rng.gaussian(complexScalars));
                a2.push_back(rng.gaussian(complexScalars));
                b.push_back(rng.nonzeroGaussian(complexScalars));
                b2.push_back(rng.gaussian(complexScalars));
            }
            Matrix A = makeDiag(a), A2 = makeDiag(a2), B = makeAntidiag(b), B2 = makeAntidiag(b2);

            Matrix dd(n), ab(n), ba(n), bb(n), bb2(n);
            for (int t = 0; t < n; ++t) {
                size_t i = static_cast<size_t>(t), r = static_cast<size_t>(n - 1 - t);
                dd.set(t, t, a[i] * a2[i]);
                ab.set(t, n - 1 - t, a[i] * b[i]);
                ba.set(t, n - 1 - t, b[i] * a[r]);
                bb.set(t, t, b[i] * b2[r]);
                bb2.set(t, t, b2[i] * b[r]);
            }
            if (A * A2 != dd) return refuted("diag*diag shape failed", (A * A2).str());
            if (A * B != ab) return refuted("diag*antidiag shape failed", (A * B).str());
            if (B * A != ba) return refuted("antidiag*diag shape failed", (B * A).str());
            if (B * B2 != bb) return refuted("antidiag*antidiag shape failed", (B * B2).str());
            if (B2 * B != bb2) return refuted("antidiag'*antidiag shape failed", (B2 * B).str());

            // palindromic diagonal commutes with every antidiagonal
            std::vector<GaussianRational> pal = a;
            for (int k = 0; k < n / 2; ++k) pal[static_cast<size_t>(n - 1 - k)] = pal[static_cast<size_t>(k)];
            Matrix P = makeDiag(pal);
            if (P * B != B * P) return refuted("palindromic diagonal failed to commute", (P * B - B * P).str());

            // converse: with all-nonzero antidiagonal, commuting forces the palindrome
            bool commutes = A * B == B * A;
            bool palindrome = true;
            for (int k = 0; k < n; ++k)
                if (a[static_cast<size_t>(k)] != a[static_cast<size_t>(n - 1 - k)]) { palindrome = false; break; }
            if (commutes && !palindrome)
                return refuted("commuting non-palindromic diagonal found", A.str());
            if (!palindrome) {
                if (A * B == B * A) return refuted("non-palindromic diagonal commuted", A.str());
            }
        }
    }
    return holds("product shapes and palindromic commutativity verified on 60 exact samples, ranks 2..6");
}

CheckResult checkComplexRepresentation(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    (void)A;
    SampleRng rng(0x5eed0002ULL);
    for (int trial = 0; trial < 20; ++trial) {
        GaussianRational a = rng.gaussian(true), b = rng.gaussian(true);
        Matrix lhs = a * I + b * C;
        Matrix rhs = Matrix::fromRows({{a, -b}, {b, a}});
        if (lhs != rhs) return refuted("dual-part representation mismatch", lhs.str());
    }
    return holds("aI+bC equals [[a,-b],[b,a]] for complex a, b on 20 exact samples");
}

CheckResult checkDualCField(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    (void)B;
    (void)A;
    if (mode == FieldMode::Q || mode == FieldMode::QAsR)
        return confirmFieldClaim("{aI+bC}", {I, C}, mode, caps);
    // over an algebraically closed coefficient field the dual part splits
    GaussianRational i = GaussianRational::i();
    return refuteFieldClaim("{aI+bC}", {I, C}, mode, caps,
                            std::make_pair(C - i * I, C + i * I),
                            "C^2=-I splits over Q(i): (C-iI)(C+iI)=0");
}

CheckResult checkDualBField(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    (void)C;
    (void)A;
    return refuteFieldClaim("{aI+cB}", {I, B}, mode, caps, std::make_pair(I + B, I - B),
                            "B^2=I gives (I+B)(I-B)=0");
}

CheckResult checkDualAField(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    (void)C;
    (void)B;
    return refuteFieldClaim("{aI+dA}", {I, A}, mode, caps, std::make_pair(I + A, I - A),
                            "A^2=I gives (I+A)(I-A)=0");
}

CheckResult checkJClosureCommutativity(FieldMode mode, const EngineCaps& caps) {
    int fields = 0;
    for (const auto& [h, k, d, b] : jGrid()) {
        Matrix J = makeJ(GaussianRational(h), GaussianRational(k), GaussianRational(d), GaussianRational(b));
        Classification cls = classify(makeSpec("{aI+cJ}", {Matrix::identity(2), J}, mode), caps);
        if (!cls.closed) return refuted("instance failed to close: " + tupleStr(h, k, d, b), J.str());
        if (cls.closureDim > 2)
            return refuted("closure exceeded dim 2: " + tupleStr(h, k, d, b), J.str());
        if (!cls.commutative)
            return refuted("instance not commutative: " + tupleStr(h, k, d, b), J.str());
        if (cls.field) ++fields;
    }
    std::ostringstream detail;
    detail << "all 100 grid instances close at dim <= 2 and are commutative; " << fields
           << " of 100 are fields over " << modeName(mode);
    return holds(detail.str());
}

CheckResult checkJFieldUniversal(FieldMode mode, const EngineCaps& caps) {
    for (const auto& [h, k, d, b] : jGrid()) {
        Matrix J = makeJ(GaussianRational(h), GaussianRational(k), GaussianRational(d), GaussianRational(b));
        Classification cls = classify(makeSpec("{aI+cJ}", {Matrix::identity(2), J}, mode), caps);
        if (cls.division.status == DivisionResult::Status::No && cls.division.witness) {
            return refuted("the universal field claim fails at " + tupleStr(h, k, d, b),
                           cls.division.witness->str());
        }
    }
    return unknown("no refuting instance found in the grid");
}

CheckResult checkDTable(FieldMode, const EngineCaps&) {
    auto [I, D1, D2, D3] = makeDFamily();
    (void)I;
    return verifyIdentities({{"D1D2=D3", D1 * D2 == D3},
                             {"D2D1=D3", D2 * D1 == D3},
                             {"D1D3=D2", D1 * D3 == D2},
                             {"D3D1=D2", D3 * D1 == D2},
                             {"D2D3=D1", D2 * D3 == D1},
                             {"D3D2=D1", D3 * D2 == D1}},
                            "the rank-3 family table holds exactly");
}

CheckResult checkDDualFields(FieldMode mode, const EngineCaps& caps) {
    auto [I, D1, D2, D3] = makeDFamily();
    for (const auto& [name, D] : {std::pair<std::string, Matrix>{"{aI+bD1}", D1},
                                  {"{aI+cD2}", D2},
                                  {"{aI+dD3}", D3}}) {
        CheckResult r = refuteFieldClaim(name, {I, D}, mode, caps, std::make_pair(I + D, I - D),
                                         "D^2=I gives (I+D)(I-D)=0");
        if (r.outcome != Outcome::Refuted) return r;
        if (name == "{aI+dD3}") {
            r.detail = "each dual part {aI+bD1}, {aI+cD2}, {aI+dD3} has zero divisors; " + r.detail;
            return r;
        }
    }
    return unknown("unreachable");
}

CheckResult checkD45Commutativity(FieldMode mode, const EngineCaps& caps) {
    auto [I, D2, D4, D5] = makeD45Family();
    std::vector<Matrix> fam = {I, D2, D4, D5};
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
            if (fam[i] * fam[j] != fam[j] * fam[i])
                return refuted("family pair does not commute",
                               Witness{Witness::Kind::Noncommuting, fam[i], fam[j], 0}.str());
    Basis span = spanBasis(fam, mode);
    auto closure = closeUnder(makeSpec("{I,D2,D4,D5}", fam, mode), caps);
    if (!closure.closed) return unknown("closure cap exceeded");
    std::ostringstream detail;
    detail << "all pairs commute; the four listed matrices span dim " << span.dim()
           << " (D5 = D4 - I + D2) and close at dim " << closure.basis.dim()
           << " under multiplication";
    bool identities = (D4 * D4 == -D2) && (D5 * D5 == -D2) && (D4 * D5 == -I) && (D2 * D4 == D5) &&
                      (D2 * D5 == D4);
    if (!identities) return refuted("family product identities failed", "");
    return holds(detail.str());
}

CheckResult checkD45DualFields(FieldMode mode, const EngineCaps& caps) {
    auto [I, D2, D4, D5] = makeD45Family();
    CheckResult r2 = refuteFieldClaim("{aI+bD2}", {I, D2}, mode, caps,
                                      std::make_pair(I + D2, I - D2), "D2^2=I gives (I+D2)(I-D2)=0");
    if (r2.outcome != Outcome::Refuted) return r2;
    CheckResult r4 = refuteFieldClaim("{aI+cD4}", {I, D4}, mode, caps, std::nullopt,
                                      "D4^2=-D2 escapes span{I,D4}; the closure has zero divisors");
    if (r4.outcome != Outcome::Refuted) return r4;
    CheckResult r5 = refuteFieldClaim("{aI+dD5}", {I, D5}, mode, caps, std::nullopt,
                                      "D5^2=-D2 escapes span{I,D5}; the closure has zero divisors");
    if (r5.outcome != Outcome::Refuted) return r5;
    r5.detail = "no dual part of the rank-3 family {I,D2,D4,D5} is a field; " + r5.detail;
    return r5;
}

CheckResult checkGRepresentation(FieldMode, const EngineCaps&) {
    auto [I, G1, G2, G3] = makeGFamily();
    SampleRng rng(0x5eed0003ULL);
    for (int trial = 0; trial < 20; ++trial) {
        GaussianRational a = rng.gaussian(false), b = rng.gaussian(false), c = rng.gaussian(false),
                         d = rng.gaussian(false);
        Matrix lhs = a * I + b * G1 + c * G2 + d * G3;
        GaussianRational zero(0);
        Matrix rhs = Matrix::fromRows({{a - b, zero, zero, c - d},
                                       {zero, a + b, c + d, zero},
                                       {zero, c + d, a + b, zero},
                                       {c - d, zero, zero, a - b}});
        if (lhs != rhs) return refuted("rank-4 display mismatch", lhs.str());
    }
    bool table = (G1 * G2 == G3) && (G2 * G1 == G3) && (G1 * G3 == G2) && (G3 * G1 == G2) &&
                 (G2 * G3 == G1) && (G3 * G2 == G1);
    if (!table) return refuted("rank-4 family table failed", "");
    return holds("aI+bG1+cG2+dG3 matches the displayed block form on 20 exact samples; the family "
                 "table G1G2=G3 (cyclically) holds");
}

CheckResult checkGField(FieldMode mode, const EngineCaps& caps) {
    auto [I, G1, G2, G3] = makeGFamily();
    return refuteFieldClaim("{aI+bG1+cG2+dG3}", {I, G1, G2, G3}, mode, caps,
                            std::make_pair(I + G1, I - G1), "G1^2=I gives (I+G1)(I-G1)=0");
}

CheckResult checkRankSpan(int rank, int pinnedDim, FieldMode mode, const EngineCaps&) {
    auto fam = makeRankFamily(rank);
    Basis span = spanBasis(fam, mode);
    std::ostringstream detail;
    detail << "the " << fam.size() << " listed rank-" << rank << " matrices span dim " << span.dim();
    if (rank == 5) detail << " (< 8; within the Schur bound 7 for commutative 5x5 subalgebras)";
    if (span.dim() != pinnedDim) {
        detail << ", expected " << pinnedDim;
        return refuted(detail.str(), "");
    }
    return holds(detail.str());
}

CheckResult checkRankCommutative(int rank, bool pinnedCommutative, FieldMode mode, const EngineCaps&) {
    auto fam = makeRankFamily(rank);
    std::optional<Witness> witness;
    for (size_t i = 0; i < fam.size() && !witness; ++i)
        for (size_t j = 0; j < fam.size(); ++j)
            if (fam[i] * fam[j] != fam[j] * fam[i]) {
                witness = Witness{Witness::Kind::Noncommuting, fam[i], fam[j], 0};
                break;
            }
    (void)mode;
    if (!witness) {
        if (pinnedCommutative) return holds("all listed matrices commute pairwise");
        return unknown("expected a noncommuting pair, found none");
    }
    if (pinnedCommutative) return refuted("family unexpectedly noncommutative", witness->str());
    return refuted("the listed matrices do not all commute (a non-palindromic diagonal pattern "
                   "fails against the all-ones secondary diagonal)",
                   witness->str());
}

CheckResult checkRankField(int rank, FieldMode mode, const EngineCaps& caps) {
    auto fam = makeRankFamily(rank);
    Matrix I = fam.front();
    Matrix G1 = fam[1];
    std::optional<std::pair<Matrix, Matrix>> pinned;
    if (rank <= 6) pinned = std::make_pair(I + G1, I - G1);
    std::string note = rank <= 6 ? "G1^2=I gives (I+G1)(I-G1)=0"
                                 : "the family is noncommutative and its closure has zero divisors";
    return refuteFieldClaim("rank-" + std::to_string(rank) + " family", fam, mode, caps, pinned, note);
}

CheckResult checkPauliCorrespondence(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    auto [sx, sy, sz] = makePauli();
    GaussianRational i = GaussianRational::i();
    return verifyIdentities({{"sx=B", sx == B},
                             {"sy=iC", sy == i * C},
                             {"sz=-A", sz == -A}},
                            "the Pauli correspondence holds entrywise");
}

CheckResult checkPauliRelations(FieldMode, const EngineCaps&) {
    auto [sx, sy, sz] = makePauli();
    Matrix I = Matrix::identity(2);
    GaussianRational i = GaussianRational::i();
    std::vector<Matrix> s = {sx, sy, sz};
    std::vector<std::pair<std::string, bool>> items;
    for (size_t p = 0; p < 3; ++p)
        for (size_t q = 0; q < 3; ++q) {
            Matrix anti = s[p] * s[q] + s[q] * s[p];
            Matrix expect = p == q ? GaussianRational(2) * I : Matrix(2);
            items.emplace_back("anticommutator " + std::to_string(p) + std::to_string(q), anti == expect);
        }
    items.emplace_back("sx*sy=i*sz", sx * sy == i * sz);
    items.emplace_back("sy*sz=i*sx", sy * sz == i * sx);
    items.emplace_back("sz*sx=i*sy", sz * sx == i * sy);
    return verifyIdentities(items, "sigma_i sigma_j + sigma_j sigma_i = 2 delta_ij I and the cyclic "
                                   "products hold exactly");
}

CheckResult checkPauliRing(FieldMode mode, const EngineCaps& caps) {
    auto [sx, sy, sz] = makePauli();
    Matrix I = Matrix::identity(2);
    auto closure = closeUnder(makeSpec("pauli ring", {I, sx, sy, sz}, mode), caps);
    if (!closure.closed) return unknown("closure cap exceeded");
    auto comm = isCommutative(closure.basis);
    std::ostringstream detail;
    detail << "closure of {I,sx,sy,sz} over " << modeName(mode) << " has dim " << closure.basis.dim()
           << " and is " << (comm.commutative ? "commutative" : "noncommutative");
    if (closure.basis.dim() == 4 && !comm.commutative) return holds(detail.str());
    return refuted(detail.str(), comm.witness ? comm.witness->str() : "");
}

CheckResult checkDiracRing(FieldMode mode, const EngineCaps& caps) {
    auto [g0, g1, g2, g3] = makeDirac();
    auto closure = closeUnder(makeSpec("gamma ring", {g0, g1, g2, g3}, mode), caps);
    if (!closure.closed) return unknown("closure cap exceeded");
    std::ostringstream detail;
    detail << "closure of the four gamma matrices over " << modeName(mode) << " has dim "
           << closure.basis.dim();
    if (closure.basis.dim() == 16) return holds(detail.str());
    return refuted(detail.str(), "");
}

CheckResult checkGamma2Identification(FieldMode, const EngineCaps&) {
    auto [g0, g1, g2, g3] = makeDirac();
    auto [I4, G1, G2, G3] = makeGFamily();
    (void)I4;
    (void)G1;
    (void)G2;
    std::vector<std::pair<std::string, bool>> items = {
        {"gamma2 = G3 entrywise", g2 == G3},
        {"(gamma0)^2 = I", g0 * g0 == Matrix::identity(4)},
    };
    std::vector<Matrix> gs = {g0, g1, g2, g3};
    for (size_t p = 0; p < 4; ++p)
        for (size_t q = p + 1; q < 4; ++q)
            items.emplace_back("anticommutator " + std::to_string(p) + std::to_string(q),
                               (gs[p] * gs[q] + gs[q] * gs[p]).isZero());
    return verifyIdentities(items,
                            "gamma2 equals the rank-4 secondary-diagonal matrix G3 entrywise under the "
                            "pinned gamma convention (gamma2 is the Pauli block form scaled by -i; "
                            "squares relative to I are +1,-1,+1,-1); all distinct pairs anticommute");
}

CheckResult checkCommutatorClosure(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    (void)I;
    AlgebraSpec spec{"span{C,B,A} commutator", {C, B, A}, mode, Bracket::Commutator};
    auto closure = closeUnder(spec, caps);
    if (closure.closed && closure.basis.dim() == 3)
        return holds("span{C,B,A} closes under the commutator at dim 3 ([C,B]=2A cyclically)");
    return refuted("commutator closure dim " + std::to_string(closure.basis.dim()),
                   closure.escaped ? closure.escaped->str() : "");
}

CheckResult checkAnticommutatorClosure(FieldMode mode, const EngineCaps& caps) {
    auto [I, C, B, A] = quaternionBasis();
    AlgebraSpec spec{"span{C,B,A} anticommutator", {C, B, A}, mode, Bracket::Anticommutator};
    auto closure = closeUnder(spec, caps);
    if (!closure.closed) return unknown("closure cap exceeded");
    bool hasUnit = closure.basis.contains(I);
    if (closure.basis.dim() == 4 && hasUnit)
        return holds("anticommutator closure of {C,B,A} adjoins I ({C,C}=-2I) and stops at dim 4");
    return refuted("anticommutator closure dim " + std::to_string(closure.basis.dim()) +
                       (hasUnit ? " contains I" : " misses I"),
                   "");
}

CheckResult checkSpacetimeSignature(FieldMode, const EngineCaps&) {
    auto [I, C, B, A] = quaternionBasis();
    std::array<Matrix, 4> units = {I, B, C, A};
    auto all1 = spacetimeForm(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), units);
    auto xOnly = spacetimeForm(Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), units);
    auto zOnly = spacetimeForm(Rational(0), Rational(0), Rational(1), Rational(0), Rational(1), units);
    std::vector<int> expectedSigns = {1, 1, -1, 1};
    bool signsOk = all1.signs == expectedSigns;
    bool evalOk = all1.lambda && *all1.lambda == GaussianRational(2) && xOnly.lambda &&
                  *xOnly.lambda == GaussianRational(1) && zOnly.lambda &&
                  *zOnly.lambda == GaussianRational(-1);
    if (!signsOk || !evalOk) return unknown("square-form evaluation did not match the pinned values");
    return refuted(
        "the square form evaluates to (x^2 + y^2 - z^2 + c^2 t^2) I: computed signature "
        "(+1,+1,-1,+1) does not match the asserted spacetime metric diag(1,1,1,-1)",
        "term squares: I^2=+I, B^2=+I, C^2=-I, A^2=+I; lambda(1,1,1,1,1)=2");
}

CheckResult checkNotInterpretable(FieldMode, const EngineCaps&) {
    return {Outcome::NotInterpretable,
            "the trailing expressions I+A(I+I+I...), I+B(I+I+I...), I+C(I+I+I...), A+I(I+A+B+C...) "
            "name no well-defined construction; recorded verbatim, no check is executed",
            "", ""};
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

const FieldMode Q = FieldMode::Q;
const FieldMode QI = FieldMode::QI;
const FieldMode QIAsC = FieldMode::QIAsC;

std::vector<Claim> buildCatalog() {
    std::vector<Claim> cat;

    cat.push_back(Claim{
        "CL-01", "Eq. (13): CB=A, BC=-A",
        "Multiplication table of the rank-2 units and the ring / division-ring nature of their span.",
        {SubCheck{"table", {{Q, Outcome::Holds}}, checkQuaternionTable},
         SubCheck{"ring-closure", {{Q, Outcome::Holds}}, checkQuaternionRing},
         SubCheck{"division-ring", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}},
                  checkQuaternionDivisionRing}}});

    cat.push_back(Claim{"CL-02", "Sec. 2: C^2 = -I",
                        "Defining squares of the rank-2 units and A = CB with BC = -A.",
                        {SubCheck{"squares", {{Q, Outcome::Holds}}, checkUnitSquares}}});

    cat.push_back(Claim{"CL-03", "Eqs. (1)-(3): displayed square identities",
                        "Squares of the higher-rank secondary-diagonal and sign-diagonal matrices, "
                        "ranks 3..8, including the displayed mixed-sign pair.",
                        {SubCheck{"squares", {{Q, Outcome::Holds}}, checkHigherRankSquares}}});

    cat.push_back(Claim{"CL-04", "Eq. (4): combinations like I+A = 2I_22",
                        "The four displayed unit combinations and their elementary-matrix forms.",
                        {SubCheck{"combinations", {{Q, Outcome::Holds}}, checkCombinations}}});

    cat.push_back(Claim{"CL-05", "Eq. (5): (I+C)(I+C)=2C",
                        "Power identities of I+C, I+B, I+A including D^n = 2^(n-1) D.",
                        {SubCheck{"powers", {{Q, Outcome::Holds}}, checkPowerIdentities}}});

    cat.push_back(Claim{"CL-06", "Eqs. (6)-(9): creation operator of particle number",
                        "Ladder operators expressed through the rank-2 units.",
                        {SubCheck{"ladder", {{Q, Outcome::Holds}}, checkLadder}}});

    cat.push_back(Claim{"CL-07", "Eqs. (10)-(12): products are still main diagonal",
                        "Shapes of diagonal / secondary-diagonal products and the palindromic "
                        "commutativity law.",
                        {SubCheck{"product-shapes", {{QI, Outcome::Holds}}, checkProductShapes}}});

    cat.push_back(Claim{
        "CL-08", "Eq. (14): commutative quotient ring--field",
        "The dual part {aI+bC} with complex coefficient display; claimed to be a field.",
        {SubCheck{"representation", {{QI, Outcome::Holds}}, checkComplexRepresentation},
         SubCheck{"field", {{Q, Outcome::Holds}, {QIAsC, Outcome::Refuted}}, checkDualCField}}});

    cat.push_back(Claim{
        "CL-09", "Sec. 3: aI+cB and aI+dA all have inverse-elements",
        "Field claims for the split dual parts {aI+cB} and {aI+dA}.",
        {SubCheck{"split-b-field", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}}, checkDualBField},
         SubCheck{"split-a-field", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}}, checkDualAField}}});

    cat.push_back(Claim{
        "CL-10", "Eq. (15): J = (bh+d, b; kb, d), here h and k are constant",
        "Closure, commutativity and the universal field claim for {aI+cJ} over a deterministic "
        "parameter grid of 100 instances.",
        {SubCheck{"closure-commutativity", {{Q, Outcome::Holds}}, checkJClosureCommutativity},
         SubCheck{"field-universal", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}},
                  checkJFieldUniversal}}});

    cat.push_back(Claim{
        "CL-11", "Eq. (16): D_1D_2 = D_2D_1 = D_3",
        "The rank-3 family table and the field claims for its dual parts.",
        {SubCheck{"table", {{Q, Outcome::Holds}}, checkDTable},
         SubCheck{"dual-part-fields", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}},
                  checkDDualFields}}});

    cat.push_back(Claim{
        "CL-12", "Eqs. (17)-(18): a new hypercomplex number",
        "Commutativity and closure of {I,D2,D4,D5} and the field claims for its dual parts.",
        {SubCheck{"commutativity-closure", {{Q, Outcome::Holds}}, checkD45Commutativity},
         SubCheck{"dual-part-fields", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}},
                  checkD45DualFields}}});

    cat.push_back(Claim{
        "CL-13", "Eq. (19): which construct still a field",
        "The rank-4 display identity for aI+bG1+cG2+dG3 and the field claim for the family.",
        {SubCheck{"representation", {{Q, Outcome::Holds}}, checkGRepresentation},
         SubCheck{"field", {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}}, checkGField}}});

    {
        Claim cl{"CL-14", "Eq. (20): eight matrices of 5-rank; twelve matrices of 7-rank",
                 "Span dimension, commutativity and field claims for the listed rank 5..8 sign "
                 "families (main-diagonal patterns mirrored onto the secondary diagonal).",
                 {}};
        const int pinnedDims[4] = {5, 6, 11, 10};
        const bool pinnedComm[4] = {true, true, false, false};
        for (int rank = 5; rank <= 8; ++rank) {
            int dim = pinnedDims[rank - 5];
            bool comm = pinnedComm[rank - 5];
            cl.checks.push_back(SubCheck{
                "span-rank" + std::to_string(rank),
                {{Q, Outcome::Holds}},
                [rank, dim](FieldMode m, const EngineCaps& c) { return checkRankSpan(rank, dim, m, c); }});
            cl.checks.push_back(SubCheck{
                "commutative-rank" + std::to_string(rank),
                {{Q, comm ? Outcome::Holds : Outcome::Refuted}},
                [rank, comm](FieldMode m, const EngineCaps& c) {
                    return checkRankCommutative(rank, comm, m, c);
                }});
            cl.checks.push_back(SubCheck{
                "field-rank" + std::to_string(rank),
                {{Q, Outcome::Refuted}, {QIAsC, Outcome::Refuted}},
                [rank](FieldMode m, const EngineCaps& c) { return checkRankField(rank, m, c); }});
        }
        cat.push_back(std::move(cl));
    }

    cat.push_back(Claim{
        "CL-15", "Eq. (22): relates three dimensional Pauli matrices",
        "The Pauli correspondence sx=B, sy=iC, sz=-A, the sigma relations, and the Pauli ring.",
        {SubCheck{"correspondence", {{QI, Outcome::Holds}}, checkPauliCorrespondence},
         SubCheck{"relations", {{QI, Outcome::Holds}}, checkPauliRelations},
         SubCheck{"ring-closure", {{QI, Outcome::Holds}}, checkPauliRing}}});

    cat.push_back(Claim{
        "CL-16", "Sec. 4: G_3 is namely gamma_2; products of Dirac matrices are closed",
        "Closure dimension of the gamma ring and the identification of gamma_2 with the rank-4 "
        "secondary-diagonal matrix G3.",
        {SubCheck{"ring-closure", {{QI, Outcome::Holds}}, checkDiracRing},
         SubCheck{"gamma2-identification", {{QI, Outcome::Holds}}, checkGamma2Identification}}});

    cat.push_back(Claim{
        "CL-17", "Eqs. (23)-(25): A_m A_n - j^2 A_n A_m",
        "Representation-level bracket closures standing in for the abstract graded brackets: "
        "commutator closure of span{C,B,A}, anticommutator closure adjoining I, and the Pauli "
        "anticommutators.",
        {SubCheck{"commutator-closure", {{Q, Outcome::Holds}}, checkCommutatorClosure},
         SubCheck{"anticommutator-closure", {{Q, Outcome::Holds}}, checkAnticommutatorClosure},
         SubCheck{"pauli-anticommutators", {{QI, Outcome::Holds}}, checkPauliRelations}}});

    cat.push_back(Claim{
        "CL-18", "Eq. (21): (Ix)^2 + (By)^2 + (Cz)^2 + (Act)^2",
        "Exact evaluation of the square form and its signature against the asserted spacetime "
        "metric diag(1,1,1,-1).",
        {SubCheck{"signature", {{Q, Outcome::Refuted}}, checkSpacetimeSignature}}});

    cat.push_back(Claim{
        "CL-19", "Sec. 2 item 2: I+A(I+I+I...)",
        "Trailing expressions with no well-defined reading.",
        {SubCheck{"trailing-expressions", {{Q, Outcome::NotInterpretable}}, checkNotInterpretable}}});

    return cat;
}

} // namespace

const std::vector<Claim>& builtinClaims() {
    static const std::vector<Claim> catalog = buildCatalog();
    return catalog;
}

const std::vector<std::pair<int, std::string>>& equationCoverage() {
    static const std::vector<std::pair<int, std::string>> cover = {
        {1, "CL-03"},  {2, "CL-03"},  {3, "CL-03"},  {4, "CL-04"},  {5, "CL-05"},
        {6, "CL-06"},  {7, "CL-06"},  {8, "CL-06"},  {9, "CL-06"},  {10, "CL-07"},
        {11, "CL-07"}, {12, "CL-07"}, {13, "CL-01"}, {14, "CL-08"}, {15, "CL-10"},
        {16, "CL-11"}, {17, "CL-12"}, {18, "CL-12"}, {19, "CL-13"}, {20, "CL-14"},
        {21, "CL-18"}, {22, "CL-15"}, {23, "CL-17"}, {24, "CL-17"}, {25, "CL-17"},
    };
    return cover;
}

namespace {

std::vector<Verdict> runOne(const Claim& claim, const EngineCaps& caps,
                            const std::optional<std::set<FieldMode>>& modeFilter) {
    std::vector<Verdict> out;
    for (const SubCheck& sc : claim.checks) {
        for (const auto& [mode, expected] : sc.expected) {
            if (modeFilter && modeFilter->find(mode) == modeFilter->end()) continue;
            auto t0 = std::chrono::steady_clock::now();
            CheckResult r = sc.run(mode, caps);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            out.push_back(Verdict{claim.id, sc.name, mode, r.outcome, expected, claim.ref, r.detail,
                                  r.witness, r.certificate, ms});
        }
    }
    return out;
}

} // namespace

std::vector<Verdict> runClaim(const std::string& id, const EngineCaps& caps,
                              const std::optional<std::set<FieldMode>>& modeFilter) {
    for (const Claim& c : builtinClaims())
        if (c.id == id) return runOne(c, caps, modeFilter);
    throw InputError("unknown claim id: " + id);
}

Report runAll(const std::optional<std::set<std::string>>& idFilter,
              const std::optional<std::set<FieldMode>>& modeFilter, const EngineCaps& caps) {
    Report report;
    report.caps = caps;
    for (const Claim& c : builtinClaims()) {
        if (idFilter && idFilter->find(c.id) == idFilter->end()) continue;
        for (Verdict& v : runOne(c, caps, modeFilter)) {
            switch (v.outcome) {
                case Outcome::Holds: ++report.holds; break;
                case Outcome::Refuted: ++report.refuted; break;
                case Outcome::Unknown: ++report.unknown; break;
                case Outcome::NotInterpretable: ++report.notInterpretable; break;
            }
            if (v.outcome != v.expected) ++report.mismatches;
            report.rows.push_back(std::move(v));
        }
    }
    return report;
}

SpacetimeResult spacetimeForm(const std::vector<std::pair<Matrix, GaussianRational>>& terms) {
    if (terms.empty()) throw InputError("square form needs at least one term");
    int rank = terms.front().first.rank();
    Matrix identity = Matrix::identity(rank);
    Matrix acc(rank);
    std::vector<int> signs;
    for (const auto& [m, c] : terms) {
        if (m.rank() != rank) throw InputError("square form requires matrices of a common rank");
        Matrix sq = m * m;
        if (sq == identity) signs.push_back(1);
        else if (sq == -identity) signs.push_back(-1);
        else signs.push_back(0);
        Matrix term = c * m;
        acc = acc + term * term;
    }
    std::optional<GaussianRational> lambda;
    Matrix scaled = acc.at(0, 0) * identity;
    if (acc == scaled) lambda = acc.at(0, 0);
    return {acc, lambda, signs};
}

SpacetimeResult spacetimeForm(const Rational& x, const Rational& y, const Rational& z,
                              const Rational& t, const Rational& c,
                              const std::array<Matrix, 4>& units) {
    return spacetimeForm({{units[0], GaussianRational(x)},
                          {units[1], GaussianRational(y)},
                          {units[2], GaussianRational(z)},
                          {units[3], GaussianRational(c * t)}});
}

} // namespace matfield
