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

#ifndef MATFIELD_GAUSSIAN_HPP
#define MATFIELD_GAUSSIAN_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "matfield/rational.hpp"

namespace matfield {

/// Coefficient field for linear combinations and for square/irreducibility
/// semantics. Q and QI are the exact fields of scalars; QAsR and QIAsC reuse
/// the same scalars and change only how squares and irreducibility are
/// decided, emulating real-closed and algebraically closed behaviour.
enum class FieldMode { Q, QI, QAsR, QIAsC };

/// True when linear combinations may use the imaginary unit (QI, QIAsC).
constexpr bool modeScalarsComplex(FieldMode m) {
    return m == FieldMode::QI || m == FieldMode::QIAsC;
}

std::string_view modeName(FieldMode m);
std::optional<FieldMode> modeFromName(std::string_view name);

/// Element of Q(i) with canonical rational parts. norm(x) = re^2 + im^2 is
/// zero iff x is zero. Immutable value type.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}    // NOLINT(google-explicit-constructor)
    GaussianRational(long n) : re_(n) {}                     // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isOne() const { return re_.isOne() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational normSq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    GaussianRational inverse() const {
        if (isZero()) throw ArithError("inverse of zero");
        Rational n = normSq();
        return {re_ / n, -im_ / n};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order (re, then im); used only to pin deterministic output and
    /// search orders, it has no algebraic meaning.
    friend bool lexLess(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Literal grammar shared by all file formats; whitespace-free.
    ///   rational := ["-"] digits ["/" digits]
    ///   gauss    := rational | rational ("+"|"-") rational "i" | ["-"] rational "i"
    /// -i is written -1i.
    std::string str() const;
    static GaussianRational parse(std::string_view text);

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

/// Answer of squareTest. Exact carries a concrete root with root^2 == input;
/// Exists asserts a root exists in the mode's semantics without producing one
/// (QAsR sign test, QIAsC roots outside Q(i)).
struct SquareTestResult {
    enum class Kind { None, Exact, Exists };
    Kind kind = Kind::None;
    GaussianRational root;

    bool hasRoot() const { return kind != Kind::None; }
};

/// Square root of x under the mode's field semantics.
///  Q:     exact rational root or none.
///  QI:    exact Gaussian-rational root or none.
///  QAsR:  existence decided by sign only (input must be real), no root value.
///  QIAsC: always exists; concrete root returned when it lies in Q(i).
SquareTestResult squareTest(const GaussianRational& x, FieldMode mode);

/// Exact rational square root helper; nullopt when x is negative or not a
/// square in Q.
std::optional<Rational> rationalSqrt(const Rational& x);

} // namespace matfield

#endif
