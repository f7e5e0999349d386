#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace laby {

// Arbitrary-precision signed integer (sign + magnitude, 32-bit limbs).
// Path-length counts outgrow 64-bit integers around level 12 for strong
// patterns, so all matrix arithmetic runs on these.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);
    static BigInt from_uint64(std::uint64_t value);
    static BigInt from_string(const std::string& text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& other) const;
    BigInt operator-(const BigInt& other) const;
    BigInt operator*(const BigInt& other) const;
    BigInt operator/(const BigInt& other) const;  // truncates toward zero
    BigInt operator%(const BigInt& other) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // quotient truncated toward zero, remainder with the dividend's sign
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    bool operator==(const BigInt& other) const;
    std::strong_ordering operator<=>(const BigInt& other) const;

    static BigInt pow(const BigInt& base, unsigned exponent);
    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

    // number of significant bits of |x|; 0 for x == 0
    std::size_t bit_length() const;
    // natural log of |x|; requires x != 0
    double log() const;
    double to_double() const;

    std::string to_string() const;

private:
    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static void divmod_magnitude(const std::vector<std::uint32_t>& u,
                                 const std::vector<std::uint32_t>& v,
                                 std::vector<std::uint32_t>& q,
                                 std::vector<std::uint32_t>& r);
};

inline BigInt operator*(std::int64_t a, const BigInt& b) { return BigInt(a) * b; }

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace laby
