#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "riocirc/errors.hpp"

namespace riocirc {

/// Exact arbitrary-precision rational, the base coefficient ring.
///
/// Values are always canonical: denominator > 0, gcd(|num|, den) = 1,
/// zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 2 + r should work
    Rational(long num, long den);
    explicit Rational(const mpz_class& num, const mpz_class& den = 1);
    explicit Rational(mpq_class v);

    /// Parses "p", "p/q" or "-p/q"; accepts the ASCII '-' and U+2212 minus.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Ring interface shared with ParamPoly (shape-preserving neutral elements).
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    bool is_invertible() const { return !is_zero(); }

    /// Multiplicative inverse; throws DomainError on zero.
    Rational inverse() const;
    Rational abs() const;
    /// Integer power; negative exponents invert (throws DomainError on 0^-k).
    Rational pow(long e) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riocirc
