#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "frobstab/errors.hpp"

namespace frobstab {

// Exact fraction with 64-bit numerator and denominator, always in lowest
// terms with positive denominator. Intermediates run through 128-bit
// integers; a result that does not fit 64 bits throws instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) { *this = make(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return from_i128(-static_cast<__int128>(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num_) * b.num_,
                         static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw usage_error("rational division by zero");
        return from_i128(static_cast<__int128>(a.num_) * b.den_,
                         static_cast<__int128>(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Canonical "num/den" rendering used in reports, CSV and JSON.
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    // Human form: integers lose the denominator.
    std::string pretty() const { return den_ == 1 ? std::to_string(num_) : str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.pretty();
    }

private:
    static Rational make(long long n, long long d) {
        if (d == 0) throw usage_error("rational with zero denominator");
        return from_i128(n, d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            a %= b;
            std::swap(a, b);
        }
        return a;
    }

    static long long narrow(__int128 v) {
        if (v > std::numeric_limits<long long>::max() ||
            v < std::numeric_limits<long long>::min())
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<long long>(v);
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw usage_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) d = 1;
        const __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = narrow(n);
        r.den_ = narrow(d);
        return r;
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace frobstab
