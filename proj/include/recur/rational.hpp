/** @file rational.hpp
 *  @brief Exact rational scalar.
 *
 *  Rational is the only numeric scalar in the library: every weight, measure,
 *  length and integral is one. Values are kept in canonical form (reduced to
 *  lowest terms, denominator positive, zero is 0/1) and all arithmetic is
 *  exact; equality is canonical-form equality.
 *
 *  Text encoding is "p/q", or just "p" when the denominator is 1, with an
 *  optional leading '-'. This is the only wire encoding of numbers anywhere
 *  in the library.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "recur/errors.hpp"

namespace recur {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    /// Zero.
    Rational() = default;

    /// Integers embed implicitly.
    Rational(long long value) : v_(value) {}

    /// p/q, canonicalized. The sign may sit on either argument.
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "p/q" or "p" with an optional leading '-'.
    static Rational parse(std::string_view text);

    /// Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_negative() const { return v_.sign() < 0; }
    bool is_positive() const { return v_.sign() > 0; }

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);  // throws BadParam on zero divisor

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.v_ == rhs.v_; }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return lhs.v_ != rhs.v_; }
    friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.v_ < rhs.v_; }
    friend bool operator<=(const Rational& lhs, const Rational& rhs) { return lhs.v_ <= rhs.v_; }
    friend bool operator>(const Rational& lhs, const Rational& rhs) { return lhs.v_ > rhs.v_; }
    friend bool operator>=(const Rational& lhs, const Rational& rhs) { return lhs.v_ >= rhs.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

}  // namespace recur
