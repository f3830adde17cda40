#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace domforge {

// Signed arbitrary-precision integer with base-2^32 magnitude limbs.
// Dominating-set counts are bounded by 2^n, which exceeds native widths
// once graphs pass ~60 vertices (the tree engine handles hundreds), so
// every exact quantity in the library is carried by this type.
class BigInt {
public:
    BigInt() = default;

    template <std::integral T>
    BigInt(T v) {
        if (v == 0) return;
        sign_ = v > 0 ? 1 : -1;
        // widen through uint64 so T's minimum negates safely
        std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                                : ~static_cast<std::uint64_t>(v) + 1;
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    explicit BigInt(std::string_view s) { *this = from_string(s); }

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t take = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0, p10 = 1;
            for (std::size_t j = 0; j < take; ++j) {
                char c = s[i + j];
                if (c < '0' || c > '9')
                    throw std::invalid_argument("BigInt: bad digit in numeral");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                p10 *= 10;
            }
            mul_small(r.mag_, p10);
            add_small(r.mag_, chunk);
            i += take;
        }
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    static BigInt pow2(unsigned k) {
        BigInt r;
        r.sign_ = 1;
        r.mag_.assign(k / 32 + 1, 0);
        r.mag_.back() = std::uint32_t{1} << (k % 32);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // truncated division: quotient rounds toward zero, remainder takes the
    // dividend's sign, |r| < |b|
    friend std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt{}, BigInt{}};
        BigInt q, r;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint32_t rem = divmod_small(work, 1000000000u);
            for (int i = 0; i < 9; ++i) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    // checked narrowing, for display widths and fast paths
    std::uint64_t to_uint64() const {
        if (sign_ < 0 || mag_.size() > 2)
            throw std::overflow_error("BigInt: does not fit in uint64");
        std::uint64_t v = 0;
        if (mag_.size() > 1) v = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }

    bool fits_uint64() const { return sign_ >= 0 && mag_.size() <= 2; }

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian, trimmed, empty iff zero

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0;
            if (cur < 0) cur += std::int64_t{1} << 32;
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static void mul_small(std::vector<std::uint32_t>& m, std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : m) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small(std::vector<std::uint32_t>& m, std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < m.size(); ++i) {
            std::uint64_t cur = m[i] + carry;
            m[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    // divides in place, returns remainder
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    // Knuth algorithm D on magnitudes
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(a, b) < 0) {
            r = a;
            return;
        }
        if (b.size() == 1) {
            q = a;
            std::uint32_t rem = divmod_small(q, b[0]);
            if (rem) r.push_back(rem);
            return;
        }
        const int shift = std::countl_zero(b.back());
        std::vector<std::uint32_t> u = shl_bits(a, shift);
        std::vector<std::uint32_t> v = shl_bits(b, shift);
        u.push_back(0);
        const std::size_t n = v.size(), m = u.size() - n - 1;
        q.assign(m + 1, 0);
        const std::uint64_t vtop = v[n - 1], vsec = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = num / vtop;
            std::uint64_t rhat = num % vtop;
            while (qhat >> 32 ||
                   qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
                if (rhat >> 32) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0;
                if (t < 0) t += std::int64_t{1} << 32;
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat one too large: add v back
                t += std::int64_t{1} << 32;
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(cur);
                    c2 = cur >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= (std::int64_t{1} << 32) - 1;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        r = shr_bits(u, shift);
    }

    static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& m, int s) {
        if (s == 0) return m;
        std::vector<std::uint32_t> r(m.size() + 1, 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            r[i] |= m[i] << s;
            r[i + 1] = m[i] >> (32 - s);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> shr_bits(std::vector<std::uint32_t> m, int s) {
        if (s != 0) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] >>= s;
                if (i + 1 < m.size()) m[i] |= m[i + 1] << (32 - s);
            }
        }
        trim(m);
        return m;
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace domforge
