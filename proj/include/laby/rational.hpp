#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "laby/bigint.hpp"

namespace laby {

// Exact rational number. Always normalized: denominator > 0, gcd(|num|, den) == 1.
// Every certified inequality in the analysis module is decided on these,
// never on floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        return (num_ * o.den_) <=> (o.num_ * den_);
    }

    Rational abs() const { return Rational(num_.abs(), den_); }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_negative()) {
            den_ = -den_;
            num_ = -num_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_zero() && g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero()) den_ = BigInt(1);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

}  // namespace laby
