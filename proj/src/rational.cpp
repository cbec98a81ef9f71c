#include "kindep/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace kindep {

namespace mp = boost::multiprecision;

namespace {

std::int64_t narrow(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational: integer part does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    if (denominator < 0) {
        value_ = mp::cpp_rational(BigInt(-numerator), BigInt(-denominator));
    } else {
        value_ = mp::cpp_rational(numerator, denominator);
    }
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

bool Rational::is_integer() const { return mp::denominator(value_) == 1; }
bool Rational::is_zero() const { return value_ == 0; }
bool Rational::is_negative() const { return value_ < 0; }

BigInt Rational::floor() const {
    BigInt n = numerator();
    BigInt d = denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) {
        q -= 1;
    }
    return q;
}

BigInt Rational::ceil() const {
    BigInt n = numerator();
    BigInt d = denominator();
    BigInt q = n / d;
    if (n % d != 0 && n > 0) {
        q += 1;
    }
    return q;
}

std::int64_t Rational::ceil_int() const { return narrow(ceil()); }
std::int64_t Rational::floor_int() const { return narrow(floor()); }

std::string Rational::str() const {
    if (is_integer()) {
        return numerator().str();
    }
    return fraction();
}

std::string Rational::fraction() const { return numerator().str() + "/" + denominator().str(); }

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text), BigInt(1));
        }
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_ == 0) {
        throw std::domain_error("rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
    if (rhs.value_ < lhs.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) {
        throw std::domain_error("ceil_div: non-positive divisor");
    }
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

}  // namespace kindep
