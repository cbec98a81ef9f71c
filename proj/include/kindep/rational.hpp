#pragma once

// Exact rational numbers for every bound, potential and comparison in the
// library. Values are always kept in lowest terms with a positive
// denominator; there is no rounding anywhere.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kindep {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(const BigInt& numerator, const BigInt& denominator);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_integer() const;
    bool is_zero() const;
    bool is_negative() const;

    // Smallest integer >= value / largest integer <= value.
    BigInt ceil() const;
    BigInt floor() const;
    // Convenience narrowing; throws std::overflow_error when out of range.
    std::int64_t ceil_int() const;
    std::int64_t floor_int() const;

    // "p/q", or "p" when the value is an integer.
    std::string str() const;
    // Always "p/q", including "3/1"; used by machine-readable output.
    std::string fraction() const;

    // Parses "p", "p/q" or "-p/q".
    static Rational parse(const std::string& text);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

    boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// ceil(a / b) for integers with b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace kindep
