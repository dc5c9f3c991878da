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

#include "matfield/matrix.hpp"

#include <sstream>

#include "internal/exact_linalg.hpp"

namespace matfield {

Matrix::Matrix(int rank) : rank_(rank), e_(static_cast<size_t>(rank) * rank, GaussianRational(0)) {
    if (rank < 1) throw InputError("matrix rank must be positive");
}

Matrix Matrix::identity(int rank) {
    Matrix m(rank);
    for (int i = 0; i < rank; ++i) m.set(i, i, GaussianRational(1));
    return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<GaussianRational>>& rows) {
    int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw InputError("matrix rows must form a square grid");
        for (int j = 0; j < n; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

bool Matrix::isZero() const {
    for (const auto& x : e_)
        if (!x.isZero()) return false;
    return true;
}

GaussianRational Matrix::trace() const {
    GaussianRational t(0);
    for (int i = 0; i < rank_; ++i) t += at(i, i);
    return t;
}

Matrix Matrix::operator-() const {
    Matrix out(rank_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rank_ != b.rank_) throw InputError("matrix rank mismatch");
    Matrix out(a.rank_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rank_ != b.rank_) throw InputError("matrix rank mismatch");
    Matrix out(a.rank_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.rank_ != b.rank_) throw InputError("matrix rank mismatch");
    const int n = a.rank_;
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < n; ++j) {
                const GaussianRational& bkj = b.at(k, j);
                if (bkj.isZero()) continue;
                out.set(i, j, out.at(i, j) + aik * bkj);
            }
        }
    return out;
}

Matrix operator*(const GaussianRational& c, const Matrix& m) {
    Matrix out(m.rank_);
    for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = c * m.e_[k];
    return out;
}

Matrix Matrix::pow(int k) const {
    if (k < 0) throw InputError("negative matrix power");
    Matrix acc = Matrix::identity(rank_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

GaussianRational Matrix::determinant() const {
    const int n = rank_;
    std::vector<GaussianRational> m = e_;
    auto at = [&](int i, int j) -> GaussianRational& { return m[static_cast<size_t>(i) * n + j]; };
    GaussianRational prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k).isZero()) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (!at(r, k).isZero()) { swap = r; break; }
            if (swap < 0) return GaussianRational(0);
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            at(i, k) = GaussianRational(0);
        }
        prev = at(k, k);
    }
    GaussianRational det = at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Matrix Matrix::inverse() const {
    GaussianRational det = determinant();
    if (det.isZero())
        throw SingularMatrixError("singular matrix (determinant " + det.str() + "): " + str());
    const int n = rank_;
    std::vector<GaussianRational> m = e_;
    Matrix inv = Matrix::identity(n);
    auto at = [&](int i, int j) -> GaussianRational& { return m[static_cast<size_t>(i) * n + j]; };
    for (int col = 0; col < n; ++col) {
        int sel = col;
        while (at(sel, col).isZero()) ++sel;   // determinant is nonzero, a pivot exists
        if (sel != col)
            for (int j = 0; j < n; ++j) {
                std::swap(at(col, j), at(sel, j));
                GaussianRational t = inv.at(col, j);
                inv.set(col, j, inv.at(sel, j));
                inv.set(sel, j, t);
            }
        GaussianRational pivInv = at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            at(col, j) *= pivInv;
            inv.set(col, j, inv.at(col, j) * pivInv);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            GaussianRational c = at(r, col);
            if (c.isZero()) continue;
            for (int j = 0; j < n; ++j) {
                at(r, j) -= c * at(col, j);
                inv.set(r, j, inv.at(r, j) - c * inv.at(col, j));
            }
        }
    }
    return inv;
}

UniPoly Matrix::charPoly(FieldMode mode) const {
    const int n = rank_;
    std::vector<GaussianRational> coeffs(static_cast<size_t>(n) + 1, GaussianRational(0));
    coeffs[static_cast<size_t>(n)] = GaussianRational(1);
    Matrix b = *this;
    for (int k = 1; k <= n; ++k) {
        GaussianRational c = -(b.trace() / GaussianRational(k));
        coeffs[static_cast<size_t>(n - k)] = c;
        if (k < n) b = *this * (b + c * Matrix::identity(n));
    }
    return UniPoly(std::move(coeffs), mode);
}

std::vector<GaussianRational> modeCoords(const Matrix& m, FieldMode mode) {
    if (modeScalarsComplex(mode)) return m.vectorize();
    std::vector<GaussianRational> out;
    out.reserve(static_cast<size_t>(m.rank()) * m.rank() * 2);
    for (const auto& x : m.vectorize()) {
        out.emplace_back(x.re());
        out.emplace_back(x.im());
    }
    return out;
}

Matrix matrixFromModeCoords(const std::vector<GaussianRational>& coords, int rank, FieldMode mode) {
    Matrix out(rank);
    size_t n2 = static_cast<size_t>(rank) * rank;
    if (modeScalarsComplex(mode)) {
        if (coords.size() != n2) throw InputError("coordinate length mismatch");
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out.set(i, j, coords[static_cast<size_t>(i) * rank + j]);
        return out;
    }
    if (coords.size() != 2 * n2) throw InputError("coordinate length mismatch");
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            size_t k = 2 * (static_cast<size_t>(i) * rank + j);
            if (!coords[k].isReal() || !coords[k + 1].isReal())
                throw InputError("rational-mode coordinates must be real");
            out.set(i, j, GaussianRational(coords[k].re(), coords[k + 1].re()));
        }
    return out;
}

UniPoly Matrix::minPoly(FieldMode mode) const {
    detail::RrefBuilder rref;
    Matrix power = Matrix::identity(rank_);
    const size_t maxPowers = modeCoords(*this, mode).size() + 1;
    for (size_t k = 0; k < maxPowers + 1; ++k) {
        auto dep = rref.insert(modeCoords(power, mode));
        if (dep) {
            std::vector<GaussianRational> cs(k + 1, GaussianRational(0));
            for (size_t j = 0; j < dep->size(); ++j) cs[j] = -(*dep)[j];
            cs[k] = GaussianRational(1);
            return UniPoly(std::move(cs), mode);
        }
        power = power * *this;
    }
    throw ArithError("no annihilating polynomial found");   // unreachable
}

Matrix evaluatePoly(const UniPoly& p, const Matrix& m, const Matrix& unit) {
    Matrix acc(m.rank());
    Matrix power = unit;
    for (int k = 0; k <= p.degree(); ++k) {
        GaussianRational c = p.coeff(k);
        if (!c.isZero()) acc = acc + c * power;
        power = power * m;
    }
    return acc;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < rank_; ++j) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace matfield
