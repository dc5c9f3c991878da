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

#ifndef MATFIELD_POLY_HPP
#define MATFIELD_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "matfield/gaussian.hpp"

namespace matfield {

/// Univariate polynomial over the scalar field, coefficients lowest degree
/// first, zero polynomial = empty coefficient list. Under modes Q / Q_AS_R
/// all coefficients must be real.
class UniPoly {
public:
    explicit UniPoly(FieldMode mode) : mode_(mode) {}
    UniPoly(std::vector<GaussianRational> coeffs, FieldMode mode);

    static UniPoly zero(FieldMode mode) { return UniPoly(mode); }
    static UniPoly constant(GaussianRational c, FieldMode mode);
    /// t^1 with the given mode.
    static UniPoly variable(FieldMode mode);

    FieldMode mode() const { return mode_; }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    bool isMonic() const { return !coeffs_.empty() && coeffs_.back().isOne(); }
    const GaussianRational& leading() const;
    GaussianRational coeff(int k) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const GaussianRational& c) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.mode_ == b.mode_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly monic() const;
    UniPoly derivative() const;
    GaussianRational evaluate(const GaussianRational& x) const;

    /// Rendering like "t^2 - 2*t + 1"; complex coefficients parenthesised.
    std::string str() const;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
    FieldMode mode_;
};

/// Exact division with remainder: p = q * quotient + remainder,
/// deg(remainder) < deg(q). Throws InputError when q is zero or modes differ.
std::pair<UniPoly, UniPoly> polyDivmod(const UniPoly& p, const UniPoly& q);

/// Monic gcd via the Euclidean algorithm.
UniPoly polyGcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p') made monic: same roots, each with multiplicity one.
UniPoly squarefreePart(const UniPoly& p);

struct PolyFactor {
    UniPoly poly;
    int multiplicity;
};

/// Outcome of factorBounded. Factored answers with concrete factors multiply
/// back to the input exactly; existenceOnly marks mode-semantic splits (QAsR)
/// that carry no concrete factors.
struct FactorAnswer {
    enum class Outcome { Factored, Irreducible, Unknown };
    Outcome outcome = Outcome::Unknown;
    std::vector<PolyFactor> factors;   // monic, non-constant, canonically ordered
    bool existenceOnly = false;
    std::string reason;

    bool isFactored() const { return outcome == Outcome::Factored; }
    bool isIrreducible() const { return outcome == Outcome::Irreducible; }
    bool hasConcreteFactors() const { return isFactored() && !existenceOnly && !factors.empty(); }
};

/// Desk-scale deterministic factorization of a monic non-constant polynomial
/// under the mode's irreducibility semantics. Degree 2 is decided by the
/// discriminant square test. Higher degrees over Q / QI run a root test and a
/// Kronecker interpolation search with a Mignotte-style height bound; caps
/// overflow to an honest Unknown. Degree above degreeCap returns Unknown.
FactorAnswer factorBounded(const UniPoly& p, int degreeCap = 8);

} // namespace matfield

#endif
