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

#include "matfield/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace matfield {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string_view modeName(FieldMode m) {
    switch (m) {
        case FieldMode::Q: return "Q";
        case FieldMode::QI: return "QI";
        case FieldMode::QAsR: return "Q_AS_R";
        case FieldMode::QIAsC: return "QI_AS_C";
    }
    return "?";
}

std::optional<FieldMode> modeFromName(std::string_view name) {
    if (name == "Q") return FieldMode::Q;
    if (name == "QI") return FieldMode::QI;
    if (name == "Q_AS_R") return FieldMode::QAsR;
    if (name == "QI_AS_C") return FieldMode::QIAsC;
    return std::nullopt;
}

std::string GaussianRational::str() const {
    if (im_.isZero()) return re_.str();
    std::string imPart = im_.abs().str() + "i";
    if (re_.isZero()) return (im_.sign() < 0 ? "-" : "") + imPart;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imPart;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

namespace {

// Parses ["-"] digits ["/" digits] starting at pos; advances pos.
Rational parseRationalToken(std::string_view s, size_t& pos, bool allowSign) {
    size_t start = pos;
    bool neg = false;
    if (allowSign && pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    size_t numStart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == numStart) throw InputError("bad scalar literal: expected digits in '" + std::string(s) + "'");
    mpz_class num(std::string(s.substr(numStart, pos - numStart)), 10);
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t denStart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == denStart) throw InputError("bad scalar literal: expected denominator digits in '" + std::string(s) + "'");
        den = mpz_class(std::string(s.substr(denStart, pos - denStart)), 10);
        if (den == 0) throw InputError("bad scalar literal: zero denominator in '" + std::string(s) + "'");
    }
    (void)start;
    if (neg) num = -num;
    return Rational(num, den);
}

} // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) throw InputError("empty scalar literal");
    size_t pos = 0;
    Rational first = parseRationalToken(text, pos, /*allowSign=*/true);
    if (pos == text.size()) return GaussianRational(first);
    if (text[pos] == 'i') {
        if (pos + 1 != text.size())
            throw InputError("bad scalar literal: trailing characters in '" + std::string(text) + "'");
        return {Rational(0), first};
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw InputError("bad scalar literal: unexpected character in '" + std::string(text) + "'");
    bool negIm = text[pos] == '-';
    ++pos;
    Rational second = parseRationalToken(text, pos, /*allowSign=*/false);
    if (pos == text.size() || text[pos] != 'i' || pos + 1 != text.size())
        throw InputError("bad scalar literal: expected trailing 'i' in '" + std::string(text) + "'");
    return {first, negIm ? -second : second};
}

std::optional<Rational> rationalSqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.isZero()) return Rational(0);
    mpz_class num = x.numerator();
    mpz_class den = x.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

namespace {

// Concrete square root in Q(i): y = u + vi with u^2 = (re + s)/2,
// v^2 = (s - re)/2 where s = sqrt(normSq(x)); all three must be rational
// squares for the root to exist.
std::optional<GaussianRational> gaussianSqrt(const GaussianRational& x) {
    if (x.isZero()) return GaussianRational(0);
    auto s = rationalSqrt(x.normSq());
    if (!s) return std::nullopt;
    Rational half(1, 2);
    auto u = rationalSqrt((x.re() + *s) * half);
    if (!u) return std::nullopt;
    auto v = rationalSqrt((*s - x.re()) * half);
    if (!v) return std::nullopt;
    // Fix the relative sign via 2uv = im.
    GaussianRational root(*u, *v);
    if ((Rational(2) * *u * *v) != x.im()) root = GaussianRational(*u, -*v);
    if (root * root != x) return std::nullopt;
    return root;
}

} // namespace

SquareTestResult squareTest(const GaussianRational& x, FieldMode mode) {
    using Kind = SquareTestResult::Kind;
    switch (mode) {
        case FieldMode::Q: {
            if (!x.isReal()) throw InputError("squareTest over Q requires a real input");
            auto r = rationalSqrt(x.re());
            if (!r) return {};
            return {Kind::Exact, GaussianRational(*r)};
        }
        case FieldMode::QAsR: {
            if (!x.isReal()) throw InputError("squareTest over Q_AS_R requires a real input");
            if (x.re().sign() < 0) return {};
            return {Kind::Exists, GaussianRational(0)};
        }
        case FieldMode::QI: {
            auto r = gaussianSqrt(x);
            if (!r) return {};
            return {Kind::Exact, *r};
        }
        case FieldMode::QIAsC: {
            auto r = gaussianSqrt(x);
            if (r) return {Kind::Exact, *r};
            return {Kind::Exists, GaussianRational(0)};
        }
    }
    return {};
}

} // namespace matfield
