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

#include "matfield/algebra.hpp"

#include <sstream>

#include "internal/exact_linalg.hpp"

namespace matfield {

std::string_view bracketName(Bracket b) {
    switch (b) {
        case Bracket::Mul: return "mul";
        case Bracket::Commutator: return "comm";
        case Bracket::Anticommutator: return "anticomm";
    }
    return "?";
}

std::optional<Bracket> bracketFromName(std::string_view name) {
    if (name == "mul") return Bracket::Mul;
    if (name == "comm") return Bracket::Commutator;
    if (name == "anticomm") return Bracket::Anticommutator;
    return std::nullopt;
}

Matrix applyBracket(Bracket b, const Matrix& x, const Matrix& y) {
    switch (b) {
        case Bracket::Mul: return x * y;
        case Bracket::Commutator: return x * y - y * x;
        case Bracket::Anticommutator: return x * y + y * x;
    }
    throw InputError("unknown bracket");
}

// ---------------------------------------------------------------------------
// Basis
// ---------------------------------------------------------------------------

Basis Basis::empty(int matrixRank, FieldMode mode) { return Basis(matrixRank, mode); }

Basis spanBasis(const std::vector<Matrix>& matrices, FieldMode mode) {
    int rank = matrices.empty() ? 1 : matrices.front().rank();
    for (const auto& m : matrices)
        if (m.rank() != rank) throw InputError("span requires matrices of a common rank");
    Basis out(rank, mode);
    detail::RrefBuilder rref;
    for (const auto& m : matrices) rref.insert(modeCoords(m, mode));
    out.coords_ = rref.rows();
    out.pivots_ = rref.pivots();
    out.elems_.reserve(out.coords_.size());
    for (const auto& row : out.coords_) out.elems_.push_back(matrixFromModeCoords(row, rank, mode));
    return out;
}

Basis::Reduction Basis::reduce(const Matrix& m) const {
    if (m.rank() != matrixRank_) throw InputError("rank mismatch in basis reduction");
    detail::Vec v = modeCoords(m, mode_);
    detail::Vec coeffs(coords_.size(), GaussianRational(0));
    for (size_t r = 0; r < coords_.size(); ++r) {
        GaussianRational c = v[static_cast<size_t>(pivots_[r])];
        if (c.isZero()) continue;
        coeffs[r] = c;
        for (size_t k = 0; k < v.size(); ++k) v[k] -= c * coords_[r][k];
    }
    bool zero = detail::vecIsZero(v);
    return {std::move(coeffs), matrixFromModeCoords(v, matrixRank_, mode_), zero};
}

Matrix Basis::combine(const std::vector<GaussianRational>& coeffs) const {
    if (coeffs.size() != elems_.size()) throw InputError("coefficient count mismatch");
    Matrix acc(matrixRank_);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].isZero()) acc = acc + coeffs[k] * elems_[k];
    return acc;
}

// ---------------------------------------------------------------------------
// Closure
// ---------------------------------------------------------------------------

ClosureResult closeUnder(const AlgebraSpec& spec, int maxDim, int maxRounds) {
    if (maxDim <= 0 || maxRounds <= 0) throw InputError("closure caps must be positive");
    if (spec.generators.empty()) throw InputError("closure requires at least one generator");
    Basis basis = spanBasis(spec.generators, spec.mode);
    for (int round = 0;; ++round) {
        std::vector<Matrix> escapes;
        std::optional<Matrix> first;
        for (int i = 0; i < basis.dim(); ++i)
            for (int j = 0; j < basis.dim(); ++j) {
                Matrix p = applyBracket(spec.bracket, basis.element(i), basis.element(j));
                if (!basis.contains(p)) {
                    if (!first) first = p;
                    escapes.push_back(std::move(p));
                }
            }
        if (escapes.empty()) return {basis, true, round, std::nullopt};
        if (round >= maxRounds) return {basis, false, round, first};
        std::vector<Matrix> next = basis.elements();
        for (auto& p : escapes) next.push_back(std::move(p));
        basis = spanBasis(next, spec.mode);
        if (basis.dim() > maxDim) return {basis, false, round + 1, first};
    }
}

ClosureResult closeUnder(const AlgebraSpec& spec, const EngineCaps& caps) {
    return closeUnder(spec, caps.maxDim, caps.maxRounds);
}

// ---------------------------------------------------------------------------
// Structure constants, unit, commutativity, radical
// ---------------------------------------------------------------------------

StructureConstants structureConstants(const Basis& basis, Bracket bracket) {
    StructureConstants table(basis.dim());
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = 0; j < basis.dim(); ++j) {
            Matrix p = applyBracket(bracket, basis.element(i), basis.element(j));
            auto red = basis.reduce(p);
            if (!red.inSpan) {
                std::string msg = "bracket value escapes the span: " + p.str();
                Witness w{Witness::Kind::NotInSpan, std::move(p), std::nullopt, 0};
                throw NotClosedError(std::move(w), std::move(msg));
            }
            table.at(i, j) = std::move(red.coeffs);
        }
    return table;
}

std::optional<Matrix> findUnit(const Basis& basis) {
    const int d = basis.dim();
    if (d == 0) return std::nullopt;
    std::vector<detail::Vec> rows;
    detail::Vec rhs;
    const FieldMode mode = basis.mode();
    for (int i = 0; i < d; ++i) {
        detail::Vec target = modeCoords(basis.element(i), mode);
        std::vector<detail::Vec> leftCols, rightCols;
        for (int k = 0; k < d; ++k) {
            leftCols.push_back(modeCoords(basis.element(k) * basis.element(i), mode));
            rightCols.push_back(modeCoords(basis.element(i) * basis.element(k), mode));
        }
        for (size_t t = 0; t < target.size(); ++t) {
            detail::Vec rowL(static_cast<size_t>(d)), rowR(static_cast<size_t>(d));
            for (int k = 0; k < d; ++k) {
                rowL[static_cast<size_t>(k)] = leftCols[static_cast<size_t>(k)][t];
                rowR[static_cast<size_t>(k)] = rightCols[static_cast<size_t>(k)][t];
            }
            rows.push_back(std::move(rowL));
            rhs.push_back(target[t]);
            rows.push_back(std::move(rowR));
            rhs.push_back(target[t]);
        }
    }
    auto sol = detail::solveLinear(std::move(rows), std::move(rhs));
    if (!sol) return std::nullopt;
    Matrix e = basis.combine(*sol);
    for (int i = 0; i < d; ++i) {
        if (e * basis.element(i) != basis.element(i)) return std::nullopt;
        if (basis.element(i) * e != basis.element(i)) return std::nullopt;
    }
    return e;
}

CommutativityResult isCommutative(const Basis& basis) {
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = i + 1; j < basis.dim(); ++j) {
            if (basis.element(i) * basis.element(j) != basis.element(j) * basis.element(i)) {
                Witness w{Witness::Kind::Noncommuting, basis.element(i), basis.element(j), 0};
                return {false, std::move(w)};
            }
        }
    return {true, std::nullopt};
}

Basis radical(const Basis& basis) {
    const int d = basis.dim();
    if (d == 0) return Basis::empty(basis.matrixRank(), basis.mode());
    StructureConstants sc = structureConstants(basis, Bracket::Mul);
    // Left-multiplication operators on the algebra: (L_i)_{m,k} = sc(i,k)[m].
    auto lm = [&](int i, int m, int k) -> const GaussianRational& {
        return sc.at(i, k)[static_cast<size_t>(m)];
    };
    std::vector<detail::Vec> gram(static_cast<size_t>(d), detail::Vec(static_cast<size_t>(d), GaussianRational(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            GaussianRational acc(0);
            for (int m = 0; m < d; ++m)
                for (int k = 0; k < d; ++k) acc += lm(i, m, k) * lm(j, k, m);
            gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
        }
    auto kernel = detail::nullspaceBasis(gram, static_cast<size_t>(d));
    std::vector<Matrix> members;
    members.reserve(kernel.size());
    for (const auto& v : kernel) members.push_back(basis.combine(v));
    return spanBasis(members, basis.mode());
}

// ---------------------------------------------------------------------------
// Candidate stream and minimal polynomials relative to the algebra unit
// ---------------------------------------------------------------------------

namespace {

std::vector<Matrix> candidateStream(const Basis& basis, const std::vector<Matrix>& extra, int budget) {
    std::vector<Matrix> out;
    auto full = [&] { return static_cast<int>(out.size()) >= budget; };
    auto push = [&](Matrix m) {
        if (!full() && !m.isZero()) out.push_back(std::move(m));
    };
    for (const auto& g : extra) push(g);
    const int d = basis.dim();
    for (int i = 0; i < d && !full(); ++i) push(basis.element(i));
    for (int i = 0; i < d && !full(); ++i)
        for (int j = i + 1; j < d && !full(); ++j) push(basis.element(i) + basis.element(j));
    static const long coeffs[4] = {1, -1, 2, -2};
    for (int i = 0; i < d && !full(); ++i)
        for (int j = i + 1; j < d && !full(); ++j)
            for (long a : coeffs)
                for (long c : coeffs) {
                    if (a == 1 && c == 1) continue;
                    push(GaussianRational(a) * basis.element(i) + GaussianRational(c) * basis.element(j));
                    if (full()) break;
                }
    static const long signs[2] = {1, -1};
    for (int i = 0; i < d && !full(); ++i)
        for (int j = i + 1; j < d && !full(); ++j)
            for (int k = j + 1; k < d && !full(); ++k)
                for (long a : signs)
                    for (long b : signs)
                        for (long c : signs) {
                            push(GaussianRational(a) * basis.element(i) +
                                 GaussianRational(b) * basis.element(j) +
                                 GaussianRational(c) * basis.element(k));
                            if (full()) break;
                        }
    return out;
}

// Least-degree monic polynomial with p(x) = 0 where the constant term acts
// through the algebra's own unit.
UniPoly relativeMinPoly(const Matrix& x, const Matrix& unit, FieldMode mode) {
    detail::RrefBuilder rref;
    Matrix power = unit;
    const size_t bound = modeCoords(x, mode).size() + 1;
    for (size_t k = 0; k <= bound; ++k) {
        auto dep = rref.insert(modeCoords(power, mode));
        if (dep) {
            std::vector<GaussianRational> cs(k + 1, GaussianRational(0));
            for (size_t j = 0; j < dep->size(); ++j) cs[j] = -(*dep)[j];
            cs[k] = GaussianRational(1);
            return UniPoly(std::move(cs), mode);
        }
        power = k == 0 ? x : power * x;
    }
    throw ArithError("no annihilating polynomial found");
}

const std::vector<GaussianRational>& gridValues() {
    static const std::vector<GaussianRational> values = [] {
        std::vector<GaussianRational> v;
        v.emplace_back(Rational(-2));
        v.emplace_back(Rational(-1));
        v.emplace_back(Rational(-1, 2));
        v.emplace_back(Rational(0));
        v.emplace_back(Rational(1, 2));
        v.emplace_back(Rational(1));
        v.emplace_back(Rational(2));
        return v;
    }();
    return values;
}

} // namespace

// ---------------------------------------------------------------------------
// Zero divisors and division certification
// ---------------------------------------------------------------------------

namespace {

std::optional<Witness> zeroDivisorSearch(const Basis& basis, const EngineCaps& caps, const Basis& rad,
                                         const std::vector<Matrix>& extraCandidates) {
    // 1. nilpotents from the radical
    for (int r = 0; r < rad.dim(); ++r) {
        const Matrix& x = rad.element(r);
        Matrix prev = x;
        Matrix p = x;
        int m = 1;
        while (!p.isZero() && m <= basis.matrixRank()) {
            prev = p;
            p = p * x;
            ++m;
        }
        if (p.isZero() && !prev.isZero())
            return Witness{Witness::Kind::ZeroDivisor, prev, x, 0};
    }

    // 2. split minimal polynomials over the candidate stream
    auto unit = findUnit(basis);
    if (unit) {
        for (const Matrix& x : candidateStream(basis, extraCandidates, caps.witnessBudget)) {
            UniPoly p = relativeMinPoly(x, *unit, basis.mode());
            if (p.degree() < 2) continue;
            FactorAnswer fa = factorBounded(p, caps.degreeCap);
            if (!fa.hasConcreteFactors()) continue;
            const UniPoly& f = fa.factors.front().poly;
            auto [g, rem] = polyDivmod(p, f);
            if (!rem.isZero()) continue;
            Matrix fx = evaluatePoly(f, x, *unit);
            Matrix gx = evaluatePoly(g, x, *unit);
            if (!fx.isZero() && !gx.isZero() && (fx * gx).isZero())
                return Witness{Witness::Kind::ZeroDivisor, fx, gx, 0};
        }
    }

    // 3. exhaustive grid over two-element subspaces, coefficient height <= 2
    const auto& values = gridValues();
    for (int i = 0; i < basis.dim(); ++i)
        for (int j = i + 1; j < basis.dim(); ++j) {
            std::vector<Matrix> pool;
            for (const auto& a : values)
                for (const auto& c : values) {
                    if (a.isZero() && c.isZero()) continue;
                    pool.push_back(a * basis.element(i) + c * basis.element(j));
                }
            for (const auto& x : pool) {
                if (x.isZero()) continue;
                for (const auto& y : pool) {
                    if (y.isZero()) continue;
                    if ((x * y).isZero())
                        return Witness{Witness::Kind::ZeroDivisor, x, y, 0};
                }
            }
        }
    return std::nullopt;
}

DivisionResult certifyDivisionImpl(const Basis& basis, const EngineCaps& caps,
                                   const std::vector<Matrix>& extraCandidates,
                                   const std::optional<Witness>& zd) {
    auto unit = findUnit(basis);
    if (basis.dim() == 1 && unit)
        return {DivisionResult::Status::Yes, Certificate{Certificate::Kind::DimOne, {}, {}, {}, {}}, std::nullopt};

    if (zd) return {DivisionResult::Status::No, std::nullopt, zd};
    if (!unit) return {DivisionResult::Status::Unknown, std::nullopt, std::nullopt};

    auto comm = isCommutative(basis);
    if (comm.commutative) {
        for (const Matrix& x : candidateStream(basis, extraCandidates, caps.witnessBudget)) {
            UniPoly p = relativeMinPoly(x, *unit, basis.mode());
            if (p.degree() != basis.dim()) continue;
            FactorAnswer fa = factorBounded(p, caps.degreeCap);
            if (fa.isIrreducible()) {
                Certificate cert{Certificate::Kind::PrimitiveElement, x, p, {}, {}};
                return {DivisionResult::Status::Yes, std::move(cert), std::nullopt};
            }
        }
        return {DivisionResult::Status::Unknown, std::nullopt, std::nullopt};
    }

    if ((basis.mode() == FieldMode::Q || basis.mode() == FieldMode::QAsR) && basis.dim() == 4) {
        Matrix minusUnit = -*unit;
        auto stream = candidateStream(basis, extraCandidates, caps.witnessBudget);
        for (const Matrix& x : stream) {
            if (x * x != minusUnit) continue;
            for (const Matrix& y : stream) {
                if (y * y != minusUnit) continue;
                if (x * y != -(y * x)) continue;
                Basis sub = spanBasis({*unit, x, y, x * y}, basis.mode());
                if (sub.dim() == 4) {
                    Certificate cert{Certificate::Kind::QuaternionNormForm, {}, {}, x, y};
                    return {DivisionResult::Status::Yes, std::move(cert), std::nullopt};
                }
            }
        }
    }
    return {DivisionResult::Status::Unknown, std::nullopt, std::nullopt};
}

} // namespace

std::optional<Witness> findZeroDivisor(const Basis& basis, const EngineCaps& caps,
                                       const std::vector<Matrix>& extraCandidates) {
    if (basis.dim() == 0) return std::nullopt;
    return zeroDivisorSearch(basis, caps, radical(basis), extraCandidates);
}

DivisionResult certifyDivision(const Basis& basis, const EngineCaps& caps,
                               const std::vector<Matrix>& extraCandidates) {
    std::optional<Witness> zd;
    if (basis.dim() > 0) zd = zeroDivisorSearch(basis, caps, radical(basis), extraCandidates);
    return certifyDivisionImpl(basis, caps, extraCandidates, zd);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

bool verifyZeroDivisor(const Basis& basis, const Witness& w) {
    if (w.kind != Witness::Kind::ZeroDivisor || !w.x || !w.y) return false;
    if (w.x->isZero() || w.y->isZero()) return false;
    if (!(*w.x * *w.y).isZero()) return false;
    return basis.contains(*w.x) && basis.contains(*w.y);
}

bool verifyNoncommuting(const Basis& basis, const Witness& w) {
    if (w.kind != Witness::Kind::Noncommuting || !w.x || !w.y) return false;
    if (*w.x * *w.y == *w.y * *w.x) return false;
    return basis.contains(*w.x) && basis.contains(*w.y);
}

bool verifyCertificate(const Basis& basis, const Certificate& c, const EngineCaps& caps) {
    auto unit = findUnit(basis);
    switch (c.kind) {
        case Certificate::Kind::DimOne:
            return basis.dim() == 1 && unit.has_value();
        case Certificate::Kind::PrimitiveElement: {
            if (!c.element || !c.minPoly || !unit) return false;
            if (!basis.contains(*c.element)) return false;
            if (c.minPoly->degree() != basis.dim()) return false;
            if (!evaluatePoly(*c.minPoly, *c.element, *unit).isZero()) return false;
            return factorBounded(*c.minPoly, caps.degreeCap).isIrreducible();
        }
        case Certificate::Kind::QuaternionNormForm: {
            if (!c.x || !c.y || !unit) return false;
            if (basis.mode() != FieldMode::Q && basis.mode() != FieldMode::QAsR) return false;
            if (basis.dim() != 4) return false;
            if (!basis.contains(*c.x) || !basis.contains(*c.y)) return false;
            Matrix minusUnit = -*unit;
            if (*c.x * *c.x != minusUnit || *c.y * *c.y != minusUnit) return false;
            if (*c.x * *c.y != -(*c.y * *c.x)) return false;
            return spanBasis({*unit, *c.x, *c.y, *c.x * *c.y}, basis.mode()).dim() == 4;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

Classification classify(const AlgebraSpec& spec, const EngineCaps& caps) {
    if (spec.bracket != Bracket::Mul)
        throw InputError("classification is defined for the multiplication bracket");
    ClosureResult closure = closeUnder(spec, caps);
    Classification out{closure.closed, closure.basis.dim(), closure.basis, closure.escaped,
                       {}, false, {}, 0, TriState::Unknown, {}, {}, false};
    if (!closure.closed) return out;

    const Basis& basis = out.basis;
    out.unit = findUnit(basis);
    auto comm = isCommutative(basis);
    out.commutative = comm.commutative;
    out.noncommutingWitness = comm.witness;
    Basis rad = radical(basis);
    out.radicalDim = rad.dim();

    auto zd = zeroDivisorSearch(basis, caps, rad, spec.generators);
    out.division = certifyDivisionImpl(basis, caps, spec.generators, zd);

    if (zd) {
        if (!verifyZeroDivisor(basis, *zd)) throw Error("internal: zero-divisor witness failed re-verification");
        out.zeroDivisors = TriState::Yes;
        out.zeroDivisorWitness = zd;
    } else if (out.division.status == DivisionResult::Status::Yes) {
        out.zeroDivisors = TriState::No;
    }

    if (out.division.status == DivisionResult::Status::Yes) {
        if (!verifyCertificate(basis, *out.division.certificate, caps))
            throw Error("internal: division certificate failed re-verification");
    }
    if (out.division.status == DivisionResult::Status::No) {
        if (!out.division.witness || !verifyZeroDivisor(basis, *out.division.witness))
            throw Error("internal: division refutation failed re-verification");
    }
    if (out.noncommutingWitness && !verifyNoncommuting(basis, *out.noncommutingWitness))
        throw Error("internal: noncommuting witness failed re-verification");

    out.field = out.commutative && out.division.status == DivisionResult::Status::Yes;
    return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string Witness::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::ZeroDivisor:
            os << "zero divisor: x*y=0 with x=" << (x ? x->str() : "?") << " y=" << (y ? y->str() : "?");
            break;
        case Kind::Noncommuting:
            os << "noncommuting pair: x=" << (x ? x->str() : "?") << " y=" << (y ? y->str() : "?");
            break;
        case Kind::NotInSpan:
            os << "product escapes span: " << (x ? x->str() : "?");
            break;
        case Kind::Nilpotent:
            os << "nilpotent: x=" << (x ? x->str() : "?") << " with x^" << exponent << "=0";
            break;
    }
    return os.str();
}

std::string Certificate::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::DimOne:
            os << "dimension-1 certificate: every nonzero element is a unit multiple of the identity";
            break;
        case Kind::PrimitiveElement:
            os << "primitive element " << (element ? element->str() : "?") << " with irreducible min poly "
               << (minPoly ? minPoly->str() : "?") << " of degree equal to dim";
            break;
        case Kind::QuaternionNormForm:
            os << "quaternion norm form: x=" << (x ? x->str() : "?") << " y=" << (y ? y->str() : "?")
               << " with x^2=y^2=-e, xy=-yx";
            break;
    }
    return os.str();
}

} // namespace matfield
