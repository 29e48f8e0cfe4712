#pragma once

#include <susa/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

namespace susa {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, the single numeric carrier of the library.
///
/// Always stored reduced: gcd(|num|, den) = 1 and den >= 1. Equality is
/// value equality of the reduced form. Immutable in spirit -- every
/// operation returns a fresh value.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "n" or "n/m" with optional leading minus on n.
    static Rational from_string(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    // "n" when integral, "n/m" otherwise.
    std::string to_string() const;

    friend Rational operator-(const Rational& v) { return Rational(-v.num_, v.den_); }
    friend Rational operator+(const Rational& lhs, const Rational& rhs);
    friend Rational operator-(const Rational& lhs, const Rational& rhs);
    friend Rational operator*(const Rational& lhs, const Rational& rhs);
    friend Rational operator/(const Rational& lhs, const Rational& rhs);

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const BigInt l = lhs.num_ * rhs.den_;
        const BigInt r = rhs.num_ * lhs.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    BigInt num_;
    BigInt den_; // always >= 1

    void reduce();
};

Rational square(const Rational& v);

/// Exact multiplicative inverse. Throws ZeroHasNoReciprocal on 0.
Rational reciprocal(const Rational& v);

/// Floor of the integer square root, Newton iteration on integers only.
BigInt isqrt(const BigInt& n);

/// The nonnegative r with r*r == v, when v is a perfect rational square;
/// nullopt otherwise. Throws NegativeValue for v < 0.
std::optional<Rational> sqrt_exact(const Rational& v);

/// True iff the reduced denominator factors over {2, 3, 5}, i.e. the value
/// has a finite sexagesimal expansion. Throws for v == 0.
bool is_regular(const Rational& v);

} // namespace susa
