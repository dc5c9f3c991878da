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

#ifndef MATFIELD_RATIONAL_HPP
#define MATFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "matfield/errors.hpp"

namespace matfield {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. Equality is structural equality of canonical forms.
/// Immutable value type; every operation returns a fresh canonical value.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                                   // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
    Rational(mpz_class n) : q_(std::move(n)) {}                   // NOLINT(google-explicit-constructor)
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw InputError("rational with zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    const mpz_class numerator() const { return q_.get_num(); }
    const mpz_class denominator() const { return q_.get_den(); }

    bool isZero() const { return sgn(q_) == 0; }
    bool isOne() const { return q_ == 1; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.isZero()) throw ArithError("rational division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    Rational inverse() const {
        if (isZero()) throw ArithError("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Literal form: `["-"] digits ["/" digits]`, denominator omitted when 1.
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

/// Canonicalize num/den; the lone constructor-level entry point for raw pairs.
inline Rational ratNormalize(const mpz_class& num, const mpz_class& den) {
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace matfield

#endif
