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

#include "matfield/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace matfield {

namespace {

void requireRealCoeffs(const std::vector<GaussianRational>& cs, FieldMode mode) {
    if (modeScalarsComplex(mode)) return;
    for (const auto& c : cs)
        if (!c.isReal())
            throw InputError("complex coefficient in a polynomial over a real scalar mode");
}

} // namespace

UniPoly::UniPoly(std::vector<GaussianRational> coeffs, FieldMode mode)
    : coeffs_(std::move(coeffs)), mode_(mode) {
    requireRealCoeffs(coeffs_, mode_);
    trim();
}

UniPoly UniPoly::constant(GaussianRational c, FieldMode mode) {
    return UniPoly({std::move(c)}, mode);
}

UniPoly UniPoly::variable(FieldMode mode) {
    return UniPoly({GaussianRational(0), GaussianRational(1)}, mode);
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

const GaussianRational& UniPoly::leading() const {
    if (coeffs_.empty()) throw ArithError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

GaussianRational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussianRational(0);
    return coeffs_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator-() const {
    std::vector<GaussianRational> out(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
    return UniPoly(std::move(out), mode_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (a.mode_ != b.mode_) throw InputError("polynomial mode mismatch");
    std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    }
    return UniPoly(std::move(out), a.mode_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.mode_ != b.mode_) throw InputError("polynomial mode mismatch");
    if (a.isZero() || b.isZero()) return UniPoly::zero(a.mode_);
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out), a.mode_);
}

UniPoly UniPoly::scaled(const GaussianRational& c) const {
    std::vector<GaussianRational> out(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
    return UniPoly(std::move(out), mode_);
}

UniPoly UniPoly::monic() const {
    if (isZero()) throw ArithError("monic form of the zero polynomial");
    if (isMonic()) return *this;
    return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly::zero(mode_);
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
    return UniPoly(std::move(out), mode_);
}

GaussianRational UniPoly::evaluate(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        GaussianRational c = coeff(k);
        if (c.isZero()) continue;
        bool negative = c.isReal() && c.re().sign() < 0;
        if (first) {
            if (negative) { os << "-"; c = -c; }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) c = -c;
        }
        first = false;
        std::string cs = c.isReal() ? c.re().str() : "(" + c.str() + ")";
        if (k == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> polyDivmod(const UniPoly& p, const UniPoly& q) {
    if (q.isZero()) throw InputError("polynomial division by zero");
    if (p.mode() != q.mode()) throw InputError("polynomial mode mismatch");
    FieldMode mode = p.mode();
    std::vector<GaussianRational> rem = p.coeffs();
    int dq = q.degree();
    int dp = static_cast<int>(rem.size()) - 1;
    if (dp < dq) return {UniPoly::zero(mode), p};
    std::vector<GaussianRational> quot(static_cast<size_t>(dp - dq + 1), GaussianRational(0));
    GaussianRational lcInv = q.leading().inverse();
    for (int k = dp; k >= dq; --k) {
        GaussianRational c = rem[static_cast<size_t>(k)] * lcInv;
        if (c.isZero()) continue;
        quot[static_cast<size_t>(k - dq)] = c;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<size_t>(k - dq + j)] -= c * q.coeff(j);
    }
    return {UniPoly(std::move(quot), mode), UniPoly(std::move(rem), mode)};
}

UniPoly polyGcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.isZero()) {
        auto [q, r] = polyDivmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.isZero()) return x;
    return x.monic();
}

UniPoly squarefreePart(const UniPoly& p) {
    if (p.isZero()) throw InputError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(GaussianRational(1), p.mode());
    UniPoly g = polyGcd(p, p.derivative());
    auto [q, r] = polyDivmod(p, g);
    if (!r.isZero()) throw ArithError("inexact squarefree division");
    return q.monic();
}

// ---------------------------------------------------------------------------
// Bounded factorization
// ---------------------------------------------------------------------------

namespace {

constexpr long kMaxDivisorsPerValue = 4096;
constexpr long kMaxKroneckerCandidates = 300000;
// Trial division is abandoned beyond this magnitude; the caller then gets an
// honest Unknown instead of an unbounded search.
const mpz_class kMaxFactorableMagnitude = mpz_class("1000000000000000000");

struct SearchOverflow {};

// Gaussian integer as a plain pair of mpz.
struct GInt {
    mpz_class re, im;
    bool isZero() const { return re == 0 && im == 0; }
    mpz_class normSq() const { return re * re + im * im; }
    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }
};

// Exact quotient a / b in Z[i]; nullopt when b does not divide a.
std::optional<GInt> gintExactDiv(const GInt& a, const GInt& b) {
    mpz_class n = b.normSq();
    if (n == 0) return std::nullopt;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    if (re % n != 0 || im % n != 0) return std::nullopt;
    return GInt{re / n, im / n};
}

std::vector<std::pair<mpz_class, int>> trialFactor(mpz_class n) {
    if (n < 0) n = -n;
    if (n > kMaxFactorableMagnitude) throw SearchOverflow{};
    std::vector<std::pair<mpz_class, int>> out;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// All divisors of a nonzero integer, both signs, sorted ascending.
std::vector<mpz_class> integerDivisors(const mpz_class& n) {
    auto primes = trialFactor(n);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : primes) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
        if (static_cast<long>(divs.size()) > kMaxDivisorsPerValue) throw SearchOverflow{};
    }
    std::vector<mpz_class> out;
    out.reserve(divs.size() * 2);
    for (const auto& d : divs) { out.push_back(d); out.push_back(-d); }
    std::sort(out.begin(), out.end());
    return out;
}

// Gaussian prime factorization of z != 0, by factoring the norm.
std::vector<std::pair<GInt, int>> gaussianPrimeFactor(const GInt& z) {
    std::vector<std::pair<GInt, int>> out;
    GInt rest = z;
    auto peel = [&](const GInt& prime) {
        int e = 0;
        while (true) {
            auto q = gintExactDiv(rest, prime);
            if (!q) break;
            rest = *q;
            ++e;
        }
        if (e > 0) out.emplace_back(prime, e);
    };
    for (const auto& [p, e] : trialFactor(z.normSq())) {
        (void)e;
        if (p == 2) {
            peel(GInt{1, 1});
        } else if (p % 4 == 3) {
            peel(GInt{p, 0});
        } else {
            // p = a^2 + b^2; both conjugate primes may divide z.
            mpz_class a = 1;
            while (true) {
                mpz_class b2 = p - a * a;
                if (b2 <= 0) break;
                if (mpz_perfect_square_p(b2.get_mpz_t())) {
                    mpz_class b;
                    mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
                    peel(GInt{a, b});
                    peel(GInt{a, -b});
                    break;
                }
                ++a;
            }
        }
    }
    return out;
}

// All divisors of a nonzero Gaussian integer including unit multiples,
// sorted by (norm, re, im).
std::vector<GInt> gaussianDivisors(const GInt& z) {
    auto primes = gaussianPrimeFactor(z);
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [p, e] : primes) {
        std::vector<GInt> next;
        GInt pk{1, 0};
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk = pk * p;
        }
        divs = std::move(next);
        if (static_cast<long>(divs.size()) > kMaxDivisorsPerValue) throw SearchOverflow{};
    }
    static const GInt units[4] = {GInt{1, 0}, GInt{-1, 0}, GInt{0, 1}, GInt{0, -1}};
    std::vector<GInt> out;
    out.reserve(divs.size() * 4);
    for (const auto& d : divs)
        for (const auto& u : units) out.push_back(d * u);
    std::sort(out.begin(), out.end(), [](const GInt& a, const GInt& b) {
        mpz_class na = a.normSq(), nb = b.normSq();
        if (na != nb) return na < nb;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GaussianRational toScalar(const GInt& z) {
    return {Rational(z.re), Rational(z.im)};
}

// Clears denominators: L * p has Gaussian-integer coefficients.
mpz_class denominatorLcm(const UniPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d1 = c.re().denominator(), d2 = c.im().denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d2.get_mpz_t());
    }
    return l;
}

GInt integerCoeff(const UniPoly& p, int k, const mpz_class& lcm) {
    GaussianRational c = p.coeff(k);
    mpz_class re = c.re().numerator() * (lcm / c.re().denominator());
    mpz_class im = c.im().numerator() * (lcm / c.im().denominator());
    return {re, im};
}

GInt evalInteger(const std::vector<GInt>& coeffs, long x) {
    GInt acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = GInt{acc.re * x + it->re, acc.im * x + it->im};
    }
    return acc;
}

bool complexMode(FieldMode m) { return modeScalarsComplex(m); }

// Roots of a monic squarefree polynomial inside the exact scalar field
// (Q for real modes, Q(i) for complex modes), via the rational root theorem
// over Z respectively Z[i].
std::vector<GaussianRational> rootsInField(const UniPoly& p) {
    std::vector<GaussianRational> roots;
    UniPoly work = p;
    if (work.coeff(0).isZero()) {
        roots.emplace_back(0);
        auto [q, r] = polyDivmod(work, UniPoly::variable(p.mode()));
        if (!r.isZero()) throw ArithError("inexact root division");
        work = q;
        if (work.coeff(0).isZero()) return roots;   // squarefree input: 0 occurs once
    }
    if (work.degree() < 1) return roots;
    mpz_class lcm = denominatorLcm(work);
    std::vector<GInt> ic(static_cast<size_t>(work.degree()) + 1);
    for (int k = 0; k <= work.degree(); ++k) ic[static_cast<size_t>(k)] = integerCoeff(work, k, lcm);
    const GInt c0 = ic.front();
    const GInt cn = ic.back();

    std::vector<GaussianRational> candidates;
    if (complexMode(p.mode())) {
        auto numerators = gaussianDivisors(c0);
        auto denominators = gaussianDivisors(cn);
        for (const auto& den : denominators) {
            // one representative per association class; units on the
            // numerator side cover the rest
            if (den.re <= 0 || den.im < 0) continue;
            for (const auto& num : numerators) {
                GaussianRational q = toScalar(num) / toScalar(den);
                candidates.push_back(q);
            }
        }
    } else {
        auto numerators = integerDivisors(c0.re);
        auto denominators = integerDivisors(cn.re);
        for (const auto& den : denominators) {
            if (den <= 0) continue;
            for (const auto& num : numerators)
                candidates.emplace_back(Rational(num, den));
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const GaussianRational& a, const GaussianRational& b) {
        return lexLess(a, b);
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& cand : candidates) {
        if (work.degree() < 1) break;
        if (work.evaluate(cand).isZero()) {
            roots.push_back(cand);
            UniPoly lin({-cand, GaussianRational(1)}, p.mode());
            auto [q, r] = polyDivmod(work, lin);
            if (!r.isZero()) throw ArithError("inexact root division");
            work = q;
        }
    }
    return roots;
}

// Lagrange interpolation through (x_k, y_k); returns the polynomial of
// degree <= points-1.
UniPoly interpolate(const std::vector<long>& xs, const std::vector<GaussianRational>& ys, FieldMode mode) {
    UniPoly acc = UniPoly::zero(mode);
    for (size_t k = 0; k < xs.size(); ++k) {
        UniPoly term = UniPoly::constant(GaussianRational(1), mode);
        GaussianRational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            term = term * UniPoly({GaussianRational(-xs[j]), GaussianRational(1)}, mode);
            denom *= GaussianRational(xs[k] - xs[j]);
        }
        acc = acc + term.scaled(ys[k] / denom);
    }
    return acc;
}

// One factor of degree exactly d of the monic polynomial p (no roots in the
// field remain in p), or nullopt. Kronecker interpolation over the integer
// points 0, 1, -1, 2, -2, ...; candidates pruned by a Mignotte-style height
// bound. Throws SearchOverflow past the candidate caps.
std::optional<UniPoly> kroneckerFactor(const UniPoly& p, int d) {
    const FieldMode mode = p.mode();
    std::vector<long> xs;
    for (long k = 0; static_cast<int>(xs.size()) < d + 1; ++k) {
        if (k == 0) xs.push_back(0);
        else { xs.push_back(k); if (static_cast<int>(xs.size()) < d + 1) xs.push_back(-k); }
    }
    mpz_class lcm = denominatorLcm(p);
    std::vector<GInt> ic(static_cast<size_t>(p.degree()) + 1);
    mpz_class maxNorm = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        ic[static_cast<size_t>(k)] = integerCoeff(p, k, lcm);
        maxNorm = std::max(maxNorm, ic[static_cast<size_t>(k)].normSq());
    }
    // Height bound for coefficients of monic factors: 2^deg * sqrt((deg+1) * maxNorm).
    mpz_class heightBound2 = maxNorm * (p.degree() + 1);
    mpz_class four(4);
    for (int k = 0; k < p.degree(); ++k) heightBound2 *= four;

    std::vector<std::vector<GInt>> divisorLists;
    for (long x : xs) {
        GInt v = evalInteger(ic, x);
        if (v.isZero()) return std::nullopt;   // a field root was missed; handled elsewhere
        divisorLists.push_back(complexMode(mode) ? gaussianDivisors(v)
                                                 : [&] {
                                                       std::vector<GInt> out;
                                                       for (const auto& n : integerDivisors(v.re))
                                                           out.push_back(GInt{n, 0});
                                                       return out;
                                                   }());
    }

    std::vector<size_t> idx(divisorLists.size(), 0);
    long candidates = 0;
    while (true) {
        if (++candidates > kMaxKroneckerCandidates) throw SearchOverflow{};
        std::vector<GaussianRational> ys(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) ys[k] = toScalar(divisorLists[k][idx[k]]);
        UniPoly cand = interpolate(xs, ys, mode);
        if (cand.degree() == d) {
            bool withinBound = true;
            UniPoly monicCand = cand.monic();
            for (const auto& c : monicCand.coeffs()) {
                mpz_class n2 = (c.re().numerator() * c.re().numerator() * c.im().denominator() * c.im().denominator()
                                + c.im().numerator() * c.im().numerator() * c.re().denominator() * c.re().denominator());
                mpz_class d2 = c.re().denominator() * c.re().denominator() * c.im().denominator() * c.im().denominator();
                if (n2 > heightBound2 * d2) { withinBound = false; break; }
            }
            if (withinBound) {
                auto [q, r] = polyDivmod(p, monicCand);
                (void)q;
                if (r.isZero()) return monicCand;
            }
        }
        size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < divisorLists[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
    }
}

// Canonical ordering: degree first, then coefficients from the highest term
// down under the (re, im) lexicographic scalar order.
bool polyLess(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return lexLess(a.coeff(k), b.coeff(k));
    }
    return false;
}

struct SqfAnswer {
    enum class Kind { Concrete, Irreducible, Existence, Unknown };
    Kind kind;
    std::vector<UniPoly> factors;   // concrete irreducible factors when Kind::Concrete
    std::string reason;
};

SqfAnswer quadraticSplit(const UniPoly& p) {
    // p = t^2 + b t + c monic.
    GaussianRational b = p.coeff(1), c = p.coeff(0);
    GaussianRational disc = b * b - GaussianRational(4) * c;
    SquareTestResult s = squareTest(disc, p.mode());
    if (s.kind == SquareTestResult::Kind::Exact) {
        GaussianRational half(Rational(1, 2));
        GaussianRational r1 = (-b + s.root) * half;
        GaussianRational r2 = (-b - s.root) * half;
        UniPoly f1({-r1, GaussianRational(1)}, p.mode());
        UniPoly f2({-r2, GaussianRational(1)}, p.mode());
        return {SqfAnswer::Kind::Concrete, {f1, f2}, {}};
    }
    if (s.kind == SquareTestResult::Kind::Exists) {
        if (p.mode() == FieldMode::QIAsC)
            return {SqfAnswer::Kind::Unknown, {}, "roots outside Q(i)"};
        return {SqfAnswer::Kind::Existence, {}, {}};
    }
    return {SqfAnswer::Kind::Irreducible, {p}, {}};
}

SqfAnswer factorSquarefree(const UniPoly& p);

SqfAnswer combine(SqfAnswer base, const SqfAnswer& more, FieldMode mode) {
    if (more.kind == SqfAnswer::Kind::Unknown) return more;
    if (more.kind == SqfAnswer::Kind::Existence) {
        if (mode == FieldMode::QIAsC) return {SqfAnswer::Kind::Unknown, {}, "roots outside Q(i)"};
        return {SqfAnswer::Kind::Existence, {}, {}};
    }
    for (const auto& f : more.factors) base.factors.push_back(f);
    return base;
}

SqfAnswer factorSquarefree(const UniPoly& p) {
    const FieldMode mode = p.mode();
    const int d = p.degree();
    if (d == 1) return {SqfAnswer::Kind::Irreducible, {p}, {}};
    if (d == 2) return quadraticSplit(p);

    std::vector<GaussianRational> roots;
    try {
        roots = rootsInField(p);
    } catch (const SearchOverflow&) {
        return {SqfAnswer::Kind::Unknown, {}, "factor search budget exceeded"};
    }

    SqfAnswer acc{SqfAnswer::Kind::Concrete, {}, {}};
    UniPoly rest = p;
    for (const auto& r : roots) {
        UniPoly lin({-r, GaussianRational(1)}, mode);
        acc.factors.push_back(lin);
        auto [q, rem] = polyDivmod(rest, lin);
        if (!rem.isZero()) throw ArithError("inexact root division");
        rest = q;
    }
    if (rest.degree() == 0) return acc;
    if (rest.degree() == 1) {
        acc.factors.push_back(rest.monic());
        return acc;
    }
    if (rest.degree() == 2) return combine(std::move(acc), quadraticSplit(rest), mode);
    if (rest.degree() == 3) {
        // A rootless cubic is irreducible over the exact field.
        if (mode == FieldMode::QAsR) return {SqfAnswer::Kind::Existence, {}, {}};
        if (mode == FieldMode::QIAsC) return {SqfAnswer::Kind::Unknown, {}, "roots outside Q(i)"};
        if (acc.factors.empty()) return {SqfAnswer::Kind::Irreducible, {p}, {}};
        acc.factors.push_back(rest);
        return acc;
    }
    for (int fd = 2; fd <= rest.degree() / 2; ++fd) {
        std::optional<UniPoly> g;
        try {
            g = kroneckerFactor(rest, fd);
        } catch (const SearchOverflow&) {
            return {SqfAnswer::Kind::Unknown, {}, "factor search budget exceeded"};
        }
        if (g) {
            auto [cof, rem] = polyDivmod(rest, *g);
            if (!rem.isZero()) throw ArithError("inexact factor division");
            SqfAnswer left = factorSquarefree(*g);
            SqfAnswer right = factorSquarefree(cof.monic());
            acc = combine(std::move(acc), left, mode);
            if (acc.kind == SqfAnswer::Kind::Concrete) acc = combine(std::move(acc), right, mode);
            return acc;
        }
    }
    // No factor of any admissible degree: irreducible over Q / Q(i).
    if (mode == FieldMode::QAsR) return {SqfAnswer::Kind::Existence, {}, {}};
    if (mode == FieldMode::QIAsC) return {SqfAnswer::Kind::Unknown, {}, "roots outside Q(i)"};
    if (acc.factors.empty()) return {SqfAnswer::Kind::Irreducible, {p}, {}};
    acc.factors.push_back(rest);
    return acc;
}

} // namespace

FactorAnswer factorBounded(const UniPoly& p, int degreeCap) {
    if (p.isZero() || p.degree() < 1) throw InputError("factorBounded requires a non-constant polynomial");
    if (!p.isMonic()) throw InputError("factorBounded requires a monic polynomial");
    FactorAnswer out;
    if (p.degree() > degreeCap) {
        out.outcome = FactorAnswer::Outcome::Unknown;
        out.reason = "degree exceeds cap";
        return out;
    }
    if (p.degree() == 1) {
        out.outcome = FactorAnswer::Outcome::Irreducible;
        return out;
    }

    UniPoly sqf = squarefreePart(p);
    SqfAnswer ans = factorSquarefree(sqf);
    switch (ans.kind) {
        case SqfAnswer::Kind::Unknown:
            out.outcome = FactorAnswer::Outcome::Unknown;
            out.reason = ans.reason;
            return out;
        case SqfAnswer::Kind::Existence:
            out.outcome = FactorAnswer::Outcome::Factored;
            out.existenceOnly = true;
            return out;
        case SqfAnswer::Kind::Irreducible:
            if (sqf == p) {
                out.outcome = FactorAnswer::Outcome::Irreducible;
                return out;
            }
            ans.factors = {sqf};
            break;
        case SqfAnswer::Kind::Concrete:
            break;
    }

    // Multiplicities by repeated exact division of the original input.
    std::sort(ans.factors.begin(), ans.factors.end(), polyLess);
    UniPoly rest = p;
    UniPoly check = UniPoly::constant(GaussianRational(1), p.mode());
    for (const auto& f : ans.factors) {
        int mult = 0;
        while (true) {
            auto [q, r] = polyDivmod(rest, f);
            if (!r.isZero()) break;
            rest = q;
            ++mult;
        }
        if (mult == 0) throw ArithError("factor does not divide its source polynomial");
        out.factors.push_back({f, mult});
        for (int k = 0; k < mult; ++k) check = check * f;
    }
    if (check != p) throw ArithError("factorization does not reconstruct the input");
    bool single = out.factors.size() == 1 && out.factors.front().multiplicity == 1;
    out.outcome = single ? FactorAnswer::Outcome::Irreducible : FactorAnswer::Outcome::Factored;
    if (single) out.factors.clear();
    return out;
}

} // namespace matfield
