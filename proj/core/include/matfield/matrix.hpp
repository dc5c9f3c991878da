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

#ifndef MATFIELD_MATRIX_HPP
#define MATFIELD_MATRIX_HPP

#include <string>
#include <vector>

#include "matfield/poly.hpp"

namespace matfield {

/// Dense square matrix over Q(i) with exact entries. "Rank" is the matrix
/// dimension n of an n-by-n matrix, matching the domain naming of the
/// families this library constructs. Equality is entrywise; values are
/// immutable in spirit: operations return fresh matrices.
class Matrix {
public:
    explicit Matrix(int rank);
    static Matrix identity(int rank);
    static Matrix fromRows(const std::vector<std::vector<GaussianRational>>& rows);

    int rank() const { return rank_; }
    const GaussianRational& at(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, GaussianRational v) { e_[index(i, j)] = std::move(v); }

    bool isZero() const;
    GaussianRational trace() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rank_ == b.rank_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(int k) const;

    /// Row-major flattening of the entries, length rank^2.
    std::vector<GaussianRational> vectorize() const { return e_; }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    GaussianRational determinant() const;

    /// Exact inverse; throws SingularMatrixError (carrying the zero
    /// determinant) when the matrix is singular.
    Matrix inverse() const;

    /// Characteristic polynomial by the Faddeev-LeVerrier recursion.
    UniPoly charPoly(FieldMode mode) const;

    /// Monic least-degree annihilator with coefficients in the mode's scalar
    /// field, found as the first linear dependence among I, m, m^2, ...
    UniPoly minPoly(FieldMode mode) const;

    /// Text form used in reports: [[1,0],[0,1]] with grammar scalar literals.
    std::string str() const;

private:
    size_t index(int i, int j) const { return static_cast<size_t>(i) * rank_ + j; }
    int rank_;
    std::vector<GaussianRational> e_;
};

/// Coordinates of m over the mode's scalar field: the plain vectorization for
/// complex-scalar modes, the re/im-interleaved refinement (length 2*rank^2)
/// for rational-scalar modes.
std::vector<GaussianRational> modeCoords(const Matrix& m, FieldMode mode);

/// Inverse of modeCoords.
Matrix matrixFromModeCoords(const std::vector<GaussianRational>& coords, int rank, FieldMode mode);

/// Evaluates p at m, with the constant term mapped to c0 * unit.
Matrix evaluatePoly(const UniPoly& p, const Matrix& m, const Matrix& unit);

} // namespace matfield

#endif
