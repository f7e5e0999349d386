#include "laby/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace laby {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t value) {
    negative_ = value < 0;
    std::uint64_t mag = negative_ ? -static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_uint64(std::uint64_t value) {
    BigInt r;
    while (value != 0) {
        r.limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
    return r;
}

BigInt BigInt::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("BigInt::from_string: empty input");
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt::from_string: no digits");
    BigInt r;
    const BigInt ten(10);
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
        r = r * ten + BigInt(ch - '0');
    }
    r.negative_ = neg && !r.is_zero();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator+(const BigInt& other) const {
    BigInt r;
    if (negative_ == other.negative_) {
        r.limbs_ = add_magnitude(limbs_, other.limbs_);
        r.negative_ = negative_;
    } else {
        int cmp = compare_magnitude(*this, other);
        if (cmp == 0) return BigInt();
        if (cmp > 0) {
            r.limbs_ = sub_magnitude(limbs_, other.limbs_);
            r.negative_ = negative_;
        } else {
            r.limbs_ = sub_magnitude(other.limbs_, limbs_);
            r.negative_ = other.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& other) const { return *this + (-other); }

BigInt BigInt::operator*(const BigInt& other) const {
    if (is_zero() || other.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != other.negative_;
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs, with a short-division fast path.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& u,
                              const std::vector<std::uint32_t>& v,
                              std::vector<std::uint32_t>& q,
                              std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (v.empty()) throw std::domain_error("BigInt: division by zero");
    if (u.size() < v.size()) {
        r = u;
        return;
    }
    if (v.size() == 1) {
        std::uint64_t d = v[0];
        std::uint64_t rem = 0;
        q.assign(u.size(), 0);
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem != 0) {
            r.push_back(static_cast<std::uint32_t>(rem & 0xffffffffu));
            if (rem >> 32) r.push_back(static_cast<std::uint32_t>(rem >> 32));
        }
        return;
    }

    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    int shift = 0;
    while (((v[n - 1] << shift) & 0x80000000u) == 0) ++shift;

    std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        vn[i] = (v[i] << shift);
        if (shift && i > 0) vn[i] |= static_cast<std::uint32_t>(v[i - 1] >> (32 - shift));
    }
    for (std::size_t i = u.size(); i-- > 0;) {
        un[i] = (u[i] << shift);
        if (shift && i > 0) un[i] |= static_cast<std::uint32_t>(u[i - 1] >> (32 - shift));
    }
    if (shift) un[u.size()] = static_cast<std::uint32_t>(u[u.size() - 1] >> (32 - shift));

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t product = qhat * vn[i] + carry;
            carry = product >> 32;
            std::int64_t diff = static_cast<std::int64_t>(un[i + j]) -
                                static_cast<std::int64_t>(product & 0xffffffffu) - borrow;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t last = static_cast<std::int64_t>(un[j + n]) -
                            static_cast<std::int64_t>(carry) - borrow;
        if (last < 0) {
            // qhat was one too large; add the divisor back
            last += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                c2 = sum >> 32;
            }
            last += static_cast<std::int64_t>(c2);
            last &= 0xffffffff;
        }
        un[j + n] = static_cast<std::uint32_t>(last);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = (un[i] >> shift);
        if (shift && i + 1 < un.size()) r[i] |= static_cast<std::uint32_t>(un[i + 1] << (32 - shift));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod_magnitude(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.negative_ = (a.negative_ != b.negative_);
    r.negative_ = a.negative_;
    q.trim();
    r.trim();
}

BigInt BigInt::operator/(const BigInt& other) const {
    BigInt q, r;
    divmod(*this, other, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& other) const {
    BigInt q, r;
    divmod(*this, other, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& other) const {
    return negative_ == other.negative_ && limbs_ == other.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& other) const {
    if (negative_ != other.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitude(*this, other);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::pow(const BigInt& base, unsigned exponent) {
    BigInt result(1), acc = base;
    while (exponent) {
        if (exponent & 1u) result = result * acc;
        exponent >>= 1;
        if (exponent) acc = acc * acc;
    }
    return result;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = y;
        y = r;
    }
    return x;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigInt::log() const {
    if (is_zero()) throw std::domain_error("BigInt::log of zero");
    // leading limbs as a double, the rest as a power of the limb base
    const std::size_t take = std::min<std::size_t>(limbs_.size(), 3);
    double top = 0;
    for (std::size_t i = 0; i < take; ++i)
        top = top * 4294967296.0 + limbs_[limbs_.size() - 1 - i];
    return std::log(top) + 32.0 * std::log(2.0) * static_cast<double>(limbs_.size() - take);
}

double BigInt::to_double() const {
    double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return negative_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> digits;  // base 10^9 chunks
    std::vector<std::uint32_t> mag = limbs_;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        digits.push_back(static_cast<std::uint32_t>(rem));
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
    }
    std::string out = negative_ ? "-" : "";
    out += std::to_string(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(digits[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) { return os << value.to_string(); }

}  // namespace laby
