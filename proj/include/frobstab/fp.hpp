#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "frobstab/errors.hpp"

namespace frobstab {

// A prime characteristic, validated at construction.
class PrimeChar {
public:
    explicit PrimeChar(std::uint32_t p) : p_(p) {
        if (p < 2)
            throw usage_error("characteristic must be at least 2, got " + std::to_string(p));
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw usage_error(std::to_string(p) + " is not prime");
    }

    std::uint32_t value() const { return p_; }

    friend bool operator==(PrimeChar a, PrimeChar b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeChar a, PrimeChar b) { return a.p_ != b.p_; }

private:
    std::uint32_t p_;
};

// Element of the prime field F_p.
//
// A value constructed from a bare integer carries no characteristic and acts
// as an integer constant: it adopts the modulus of the first contextual
// operand it meets. Eigen's internal Scalar(0) / Scalar(1) constructions go
// through this path, which is what makes Matrix<Fp, ...> work with a runtime
// modulus. Mixing two contextual values of different characteristic throws.
class Fp {
public:
    Fp() = default;
    Fp(long long v) : raw_(v) {}
    Fp(PrimeChar p, long long v) : raw_(reduce(v, p.value())), p_(p.value()) {}

    bool has_context() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }

    // Canonical residue in [0, p-1] when contextual, the raw constant otherwise.
    long long value() const { return raw_; }
    bool is_zero() const { return raw_ == 0; }

    Fp operator-() const {
        if (p_ == 0) return Fp(checked_neg(raw_));
        return from_raw(p_, raw_ == 0 ? 0 : static_cast<long long>(p_) - raw_);
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const std::uint32_t p = join(a, b);
        if (p == 0) return Fp(checked_add(a.raw_, b.raw_));
        return from_raw(p, (reduce(a.raw_, p) + reduce(b.raw_, p)) % p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        const std::uint32_t p = join(a, b);
        if (p == 0) return Fp(checked_mul(a.raw_, b.raw_));
        const std::uint64_t prod = static_cast<std::uint64_t>(reduce(a.raw_, p)) *
                                   static_cast<std::uint64_t>(reduce(b.raw_, p));
        return from_raw(p, static_cast<long long>(prod % p));
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (raw_ == 0)
            throw usage_error("division by zero in F_p");
        if (p_ == 0) {
            if (raw_ == 1 || raw_ == -1) return *this;
            throw usage_error("inverse of a context-free constant other than +-1");
        }
        // extended Euclid on (raw_, p_)
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = raw_;
        while (new_r != 0) {
            const long long q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return from_raw(p_, reduce(t, p_));
    }

    Fp pow(std::uint64_t e) const {
        Fp acc = p_ == 0 ? Fp(1) : from_raw(p_, 1);
        Fp base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        const std::uint32_t p = join(a, b);
        if (p == 0) return a.raw_ == b.raw_;
        return reduce(a.raw_, p) == reduce(b.raw_, p);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.raw_; }

private:
    static Fp from_raw(std::uint32_t p, long long canonical) {
        Fp x;
        x.raw_ = canonical;
        x.p_ = p;
        return x;
    }

    static long long reduce(long long v, std::uint32_t p) {
        const long long m = static_cast<long long>(p);
        const long long r = v % m;
        return r < 0 ? r + m : r;
    }

    static std::uint32_t join(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
            throw mismatch_error("operands in F_" + std::to_string(a.p_) + " and F_" +
                                 std::to_string(b.p_));
        return a.p_ != 0 ? a.p_ : b.p_;
    }

    // Context-free constants only ever hold small integers; overflow is a bug,
    // not a wraparound.
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("F_p constant overflow");
        return r;
    }
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("F_p constant overflow");
        return r;
    }
    static long long checked_neg(long long a) {
        if (a == std::numeric_limits<long long>::min())
            throw std::overflow_error("F_p constant overflow");
        return -a;
    }

    long long raw_ = 0;
    std::uint32_t p_ = 0; // 0 = context-free constant
};

// k! mod p; zero exactly when k >= p.
inline Fp factorial_mod_p(long long k, PrimeChar p) {
    if (k < 0) throw usage_error("factorial of a negative integer");
    if (k >= static_cast<long long>(p.value())) return Fp(p, 0);
    Fp acc(p, 1);
    for (long long i = 2; i <= k; ++i) acc *= Fp(p, i);
    return acc;
}

} // namespace frobstab

namespace Eigen {

template <>
struct NumTraits<frobstab::Fp> {
    using Self = frobstab::Fp;
    using Real = Self;
    using NonInteger = Self;
    using Literal = Self;
    using Nested = Self;

    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };

    static inline Self epsilon() { return Self(0); }
    static inline Self dummy_precision() { return Self(0); }
    static inline int digits10() { return 10; }
};

} // namespace Eigen
