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

// Internal exact linear algebra over Q(i) row vectors. Everything here is
// deterministic: pivots are always the first nonzero coordinate, rows are
// kept in reduced echelon form sorted by pivot.

#ifndef MATFIELD_INTERNAL_EXACT_LINALG_HPP
#define MATFIELD_INTERNAL_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "matfield/gaussian.hpp"

namespace matfield::detail {

using Vec = std::vector<GaussianRational>;

inline bool vecIsZero(const Vec& v) {
    for (const auto& x : v)
        if (!x.isZero()) return false;
    return true;
}

inline int firstNonzero(const Vec& v) {
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].isZero()) return static_cast<int>(k);
    return -1;
}

/// Incrementally built reduced row echelon form with dependency tracking:
/// each kept row also records its expression in terms of the inserted
/// originals, so a dependent insert can report exact combination
/// coefficients.
class RrefBuilder {
public:
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int insertedCount() const { return inserted_; }

    /// Inserts v. Returns nullopt when v was independent (now part of the
    /// basis); otherwise returns coefficients c with v = sum c_k original_k
    /// over the previously inserted originals.
    std::optional<Vec> insert(Vec v) {
        Vec combo(static_cast<size_t>(inserted_), GaussianRational(0));
        reduceTracked(v, combo);
        ++inserted_;
        if (vecIsZero(v)) {
            return combo;
        }
        int piv = firstNonzero(v);
        GaussianRational inv = v[static_cast<size_t>(piv)].inverse();
        scale(v, inv);
        scale(combo, inv);
        // kept row = inv * (original_m - sum acc_k original_k)
        for (auto& c : combos_) c.resize(static_cast<size_t>(inserted_), GaussianRational(0));
        combo.resize(static_cast<size_t>(inserted_), GaussianRational(0));
        combo[static_cast<size_t>(inserted_ - 1)] = inv;
        for (size_t k = 0; k + 1 < combo.size(); ++k) combo[k] = -combo[k];
        // eliminate the new pivot from all existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            GaussianRational c = rows_[r][static_cast<size_t>(piv)];
            if (c.isZero()) continue;
            axpy(rows_[r], c, v);
            axpy(combos_[r], c, combo);
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
        combos_.insert(combos_.begin() + static_cast<long>(pos), std::move(combo));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
        return std::nullopt;
    }

    /// Reduction of v against the current basis: coefficients per basis row
    /// (in row order) plus the remainder.
    std::pair<Vec, Vec> reduce(const Vec& v) const {
        Vec rem = v;
        Vec coeffs(rows_.size(), GaussianRational(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            GaussianRational c = rem[static_cast<size_t>(pivots_[r])];
            if (c.isZero()) continue;
            coeffs[r] = c;
            axpy(rem, c, rows_[r]);
        }
        return {std::move(coeffs), std::move(rem)};
    }

private:
    static void scale(Vec& v, const GaussianRational& c) {
        for (auto& x : v) x *= c;
    }
    // v -= c * w
    static void axpy(Vec& v, const GaussianRational& c, const Vec& w) {
        for (size_t k = 0; k < w.size() && k < v.size(); ++k) v[k] -= c * w[k];
    }
    void reduceTracked(Vec& v, Vec& combo) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            GaussianRational c = v[static_cast<size_t>(pivots_[r])];
            if (c.isZero()) continue;
            axpy(v, c, rows_[r]);
            Vec rc = combos_[r];
            rc.resize(combo.size(), GaussianRational(0));
            for (size_t k = 0; k < combo.size(); ++k) combo[k] += c * rc[k];
        }
    }

    std::vector<Vec> rows_;
    std::vector<Vec> combos_;
    std::vector<int> pivots_;
    int inserted_ = 0;
};

/// First exact solution of A x = b (free variables zero), or nullopt when the
/// system is inconsistent. A is given as rows.
inline std::optional<Vec> solveLinear(std::vector<Vec> a, Vec b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivotCol;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && a[sel][col].isZero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        GaussianRational inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            GaussianRational c = a[r][col];
            if (c.isZero()) continue;
            for (size_t k = 0; k < cols; ++k) a[r][k] -= c * a[rank][k];
            b[r] -= c * b[rank];
        }
        pivotCol.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].isZero()) return std::nullopt;
    Vec x(cols, GaussianRational(0));
    for (size_t r = 0; r < rank; ++r) x[static_cast<size_t>(pivotCol[r])] = b[r];
    return x;
}

/// Deterministic basis of the right nullspace of A.
inline std::vector<Vec> nullspaceBasis(std::vector<Vec> a, size_t cols) {
    const size_t rows = a.size();
    std::vector<int> pivotOfCol(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && a[sel][col].isZero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[rank]);
        GaussianRational inv = a[rank][col].inverse();
        for (auto& x : a[rank]) x *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            GaussianRational c = a[r][col];
            if (c.isZero()) continue;
            for (size_t k = 0; k < cols; ++k) a[r][k] -= c * a[rank][k];
        }
        pivotOfCol[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<Vec> basis;
    for (size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (pivotOfCol[freeCol] >= 0) continue;
        Vec v(cols, GaussianRational(0));
        v[freeCol] = GaussianRational(1);
        for (size_t col = 0; col < cols; ++col) {
            int pr = pivotOfCol[col];
            if (pr >= 0) v[col] = -a[static_cast<size_t>(pr)][freeCol];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace matfield::detail

#endif
