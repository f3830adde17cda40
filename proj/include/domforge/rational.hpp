#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "domforge/bigint.hpp"

namespace domforge {

// Exact fraction of BigInts, eagerly reduced, denominator always positive.
// Eager reduction makes equality structural; ordering goes through
// cross-multiplication so no floating point is ever involved.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral T>
    Rational(T v) : num_(v), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
        } else {
            BigInt g = BigInt::gcd(num_, den_);
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // "8/3", or just "2" when integral
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // display-only decimal rendering via integer long division,
    // rounded half-up at the last digit
    std::string decimal_string(int digits = 6) const {
        BigInt scale(1);
        for (int i = 0; i < digits; ++i) scale *= BigInt(10);
        BigInt scaled = num_.abs() * scale;
        BigInt rounded = (scaled + divmod(den_, BigInt(2)).first) / den_;
        auto [ip, fp] = divmod(rounded, scale);
        std::string frac = fp.to_string();
        if (static_cast<int>(frac.size()) < digits)
            frac.insert(frac.begin(), digits - frac.size(), '0');
        std::string s = ip.to_string() + "." + frac;
        if (num_.is_negative()) s.insert(s.begin(), '-');
        return s;
    }

private:
    BigInt num_, den_;
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

}  // namespace domforge
