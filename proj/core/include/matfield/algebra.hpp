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

#ifndef MATFIELD_ALGEBRA_HPP
#define MATFIELD_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "matfield/families.hpp"
#include "matfield/matrix.hpp"

namespace matfield {

enum class Bracket { Mul, Commutator, Anticommutator };

std::string_view bracketName(Bracket b);
std::optional<Bracket> bracketFromName(std::string_view name);

Matrix applyBracket(Bracket b, const Matrix& x, const Matrix& y);

/// A named generator set over a coefficient mode, the unit of classification.
struct AlgebraSpec {
    std::string name;
    std::vector<Matrix> generators;   // common rank, at least one
    FieldMode mode = FieldMode::Q;
    Bracket bracket = Bracket::Mul;
};

/// Search and closure caps. The defaults are generous for every built-in
/// family; the largest built-in closure is the rank-4 gamma ring at dim 16.
struct EngineCaps {
    int maxDim = 64;
    int maxRounds = 8;
    int witnessBudget = 500;
    int degreeCap = 8;
};

/// Echelonized span of matrices over the mode's scalar field. The reduced
/// echelon basis of a subspace is unique, so Basis is canonical for the span
/// it represents: each element has its pivot coordinate normalized to 1 and
/// zero in every other element's pivot position.
class Basis {
public:
    static Basis empty(int matrixRank, FieldMode mode);

    int dim() const { return static_cast<int>(elems_.size()); }
    const std::vector<Matrix>& elements() const { return elems_; }
    const Matrix& element(int k) const { return elems_[static_cast<size_t>(k)]; }
    const std::vector<int>& pivotPositions() const { return pivots_; }
    FieldMode mode() const { return mode_; }
    int matrixRank() const { return matrixRank_; }

    struct Reduction {
        std::vector<GaussianRational> coeffs;
        Matrix remainder;
        bool inSpan;
    };
    Reduction reduce(const Matrix& m) const;
    bool contains(const Matrix& m) const { return reduce(m).inSpan; }

    /// Linear combination sum coeffs_k * element_k.
    Matrix combine(const std::vector<GaussianRational>& coeffs) const;

    friend Basis spanBasis(const std::vector<Matrix>& matrices, FieldMode mode);

private:
    Basis(int matrixRank, FieldMode mode) : matrixRank_(matrixRank), mode_(mode) {}
    int matrixRank_;
    FieldMode mode_;
    std::vector<Matrix> elems_;
    std::vector<std::vector<GaussianRational>> coords_;
    std::vector<int> pivots_;
};

/// Deterministic echelon basis of the linear span; empty input gives dim 0.
Basis spanBasis(const std::vector<Matrix>& matrices, FieldMode mode);

struct ClosureResult {
    Basis basis;
    bool closed;
    int rounds;
    /// First bracket value that escaped when the caps were hit.
    std::optional<Matrix> escaped;
};

/// Smallest subspace containing the generators and closed under the bracket,
/// by alternating spans with pairwise brackets; stops with closed = false
/// when the caps are exceeded, keeping the last basis.
ClosureResult closeUnder(const AlgebraSpec& spec, int maxDim, int maxRounds);
ClosureResult closeUnder(const AlgebraSpec& spec, const EngineCaps& caps = {});

/// Refutation payloads; every witness re-verifies by direct arithmetic.
struct Witness {
    enum class Kind { ZeroDivisor, Noncommuting, NotInSpan, Nilpotent };
    Kind kind;
    std::optional<Matrix> x;
    std::optional<Matrix> y;
    int exponent = 0;            // Nilpotent: x^exponent = 0
    std::string str() const;
};

/// dim x dim table of bracket coefficients over the basis:
/// bracket(b_i, b_j) = sum_k table(i, j)[k] * b_k.
class StructureConstants {
public:
    StructureConstants(int dim) : dim_(dim), table_(static_cast<size_t>(dim) * dim) {}
    int dim() const { return dim_; }
    const std::vector<GaussianRational>& at(int i, int j) const {
        return table_[static_cast<size_t>(i) * dim_ + j];
    }
    std::vector<GaussianRational>& at(int i, int j) {
        return table_[static_cast<size_t>(i) * dim_ + j];
    }

private:
    int dim_;
    std::vector<std::vector<GaussianRational>> table_;
};

/// Exact structure constants; throws NotClosedError carrying a NotInSpan
/// witness when some bracket escapes the span.
class NotClosedError : public Error {
public:
    NotClosedError(Witness w, std::string msg) : Error(std::move(msg)), witness_(std::move(w)) {}
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};
StructureConstants structureConstants(const Basis& basis, Bracket bracket);

/// The unique two-sided identity of the algebra, if one exists, found by an
/// exact linear solve. Requires a basis closed under multiplication.
std::optional<Matrix> findUnit(const Basis& basis);

struct CommutativityResult {
    bool commutative;
    std::optional<Witness> witness;   // Noncommuting pair on failure
};
CommutativityResult isCommutative(const Basis& basis);

/// Kernel of the trace form (x, y) -> Tr(L_x L_y) of the regular
/// representation; in characteristic zero this is the Jacobson radical, and
/// every nonzero member is nilpotent. Requires a basis closed under Mul.
Basis radical(const Basis& basis);

/// Deterministic zero-divisor search: radical nilpotents first, then factored
/// minimal polynomials over the candidate stream (extraCandidates, typically
/// the original generators, are tried before the basis-derived stream), then
/// an exhaustive grid over two-element subspaces with coefficient height <= 2.
std::optional<Witness> findZeroDivisor(const Basis& basis, const EngineCaps& caps = {},
                                       const std::vector<Matrix>& extraCandidates = {});

/// Re-checkable positive certificates for division verdicts.
struct Certificate {
    enum class Kind { DimOne, PrimitiveElement, QuaternionNormForm };
    Kind kind;
    std::optional<Matrix> element;     // PrimitiveElement
    std::optional<UniPoly> minPoly;    // PrimitiveElement
    std::optional<Matrix> x, y;        // QuaternionNormForm generators
    std::string str() const;
};

struct DivisionResult {
    enum class Status { Yes, No, Unknown };
    Status status;
    std::optional<Certificate> certificate;   // Yes
    std::optional<Witness> witness;           // No
};

/// Division verdict with certificate or witness; Unknown when the searches
/// exhaust their budget without an answer. Requires a closed basis.
DivisionResult certifyDivision(const Basis& basis, const EngineCaps& caps = {},
                               const std::vector<Matrix>& extraCandidates = {});

enum class TriState { Yes, No, Unknown };

/// Full classification of the algebra generated by a Mul-bracket spec. Every
/// certificate and witness is re-verified before the result is returned.
struct Classification {
    bool closed;
    int closureDim;
    Basis basis;
    std::optional<Matrix> escapedProduct;   // when not closed at caps

    std::optional<Matrix> unit;
    bool commutative = false;
    std::optional<Witness> noncommutingWitness;
    int radicalDim = 0;

    TriState zeroDivisors = TriState::Unknown;
    std::optional<Witness> zeroDivisorWitness;

    DivisionResult division;
    bool field = false;   // commutative and division == Yes
};

Classification classify(const AlgebraSpec& spec, const EngineCaps& caps = {});

/// Witness / certificate verification used before results are returned;
/// exposed so reports and tests can re-check payloads independently.
bool verifyZeroDivisor(const Basis& basis, const Witness& w);
bool verifyNoncommuting(const Basis& basis, const Witness& w);
bool verifyCertificate(const Basis& basis, const Certificate& c, const EngineCaps& caps);

} // namespace matfield

#endif
