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

// Test-only oracles, deliberately written against the naive textbook
// definitions and independent of the library's elimination / search code.

#ifndef MATFIELD_TESTS_ORACLE_HELPERS_HPP
#define MATFIELD_TESTS_ORACLE_HELPERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "matfield/algebra.hpp"

namespace oracle {

using matfield::GaussianRational;
using matfield::Matrix;
using matfield::Rational;

/// Cofactor (Laplace) expansion determinant; O(n!) but exact.
inline GaussianRational laplaceDeterminant(const Matrix& m) {
    const int n = m.rank();
    if (n == 1) return m.at(0, 0);
    GaussianRational acc(0);
    for (int col = 0; col < n; ++col) {
        if (m.at(0, col).isZero()) continue;
        Matrix minor(n - 1 > 0 ? n - 1 : 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor.set(i - 1, jj++, m.at(i, j));
            }
        }
        GaussianRational term = m.at(0, col) * laplaceDeterminant(minor);
        acc = col % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

/// Rank of a list of coordinate vectors by plain forward elimination
/// (no pivot normalization, no reduced form): a code path distinct from the
/// library's RREF builder.
inline int independentRank(std::vector<std::vector<GaussianRational>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c].isZero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].isZero()) continue;
            GaussianRational f = rows[i][c] / rows[r][c];
            for (size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline int spanRankOracle(const std::vector<Matrix>& mats, matfield::FieldMode mode) {
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& m : mats) rows.push_back(matfield::modeCoords(m, mode));
    return independentRank(std::move(rows));
}

/// Dimension of the multiplicative closure by brute force: all products of
/// generator words up to the given length, ranked independently.
inline int bruteClosureDim(const std::vector<Matrix>& gens, matfield::FieldMode mode, int maxLen) {
    std::vector<Matrix> words = gens;
    std::vector<Matrix> frontier = gens;
    for (int len = 2; len <= maxLen; ++len) {
        std::vector<Matrix> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) next.push_back(w * g);
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return spanRankOracle(words, mode);
}

/// Exhaustive zero-divisor grid over the whole span with rational
/// coefficients of numerator/denominator height <= 2.
inline std::optional<std::pair<Matrix, Matrix>> gridZeroDivisor(const std::vector<Matrix>& basis) {
    std::vector<GaussianRational> values;
    for (long num : {-2L, -1L, 0L, 1L, 2L})
        for (long den : {1L, 2L}) values.emplace_back(Rational(num, den));
    std::sort(values.begin(), values.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return lexLess(a, b); });
    values.erase(std::unique(values.begin(), values.end()), values.end());

    std::vector<Matrix> pool;
    std::vector<size_t> idx(basis.size(), 0);
    while (true) {
        Matrix m(basis.front().rank());
        for (size_t k = 0; k < basis.size(); ++k) m = m + values[idx[k]] * basis[k];
        if (!m.isZero()) pool.push_back(m);
        size_t pos = idx.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values.size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
        if (done) break;
    }
    for (const auto& x : pool)
        for (const auto& y : pool)
            if ((x * y).isZero()) return std::make_pair(x, y);
    return std::nullopt;
}

/// Deterministic exact sample values for property-style tests.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rational rational(long span = 9, long maxDen = 4) {
        long num = static_cast<long>(next() % static_cast<std::uint64_t>(2 * span + 1)) - span;
        long den = static_cast<long>(next() % static_cast<std::uint64_t>(maxDen)) + 1;
        return Rational(num, den);
    }
    Rational nonzeroRational(long span = 9, long maxDen = 4) {
        while (true) {
            Rational r = rational(span, maxDen);
            if (!r.isZero()) return r;
        }
    }
    GaussianRational gaussian(bool complexPart = true) {
        return {rational(), complexPart ? rational() : Rational(0)};
    }
    GaussianRational nonzeroGaussian(bool complexPart = true) {
        while (true) {
            GaussianRational g = gaussian(complexPart);
            if (!g.isZero()) return g;
        }
    }
    Matrix matrix(int rank, bool complexEntries = false) {
        Matrix m(rank);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) m.set(i, j, gaussian(complexEntries));
        return m;
    }

private:
    std::uint64_t state_;
};

} // namespace oracle

#endif
