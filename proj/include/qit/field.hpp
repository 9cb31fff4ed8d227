#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <ostream>
#include <string>

namespace qit {

/// Exact rationals; the default coefficient field of representations.
using Rational = mpq_class;

/// Prime field F_P. P must be prime and below 2^31.
template <std::uint32_t P>
class Zp {
    static_assert(P >= 2 && P < (1U << 31), "modulus out of range");

public:
    static constexpr std::uint32_t modulus = P;

    constexpr Zp() = default;
    constexpr Zp(long long v) : value_(reduce(v)) {} // NOLINT(google-explicit-constructor)

    constexpr std::uint32_t value() const noexcept { return value_; }

    friend constexpr Zp operator+(Zp a, Zp b) { return from_raw((a.value_ + b.value_) % P); }
    friend constexpr Zp operator-(Zp a, Zp b) { return from_raw((a.value_ + P - b.value_) % P); }
    friend constexpr Zp operator*(Zp a, Zp b) {
        return from_raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % P));
    }
    friend constexpr Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
    constexpr Zp operator-() const { return from_raw((P - value_) % P); }
    constexpr Zp& operator+=(Zp b) { return *this = *this + b; }
    constexpr Zp& operator-=(Zp b) { return *this = *this - b; }
    constexpr Zp& operator*=(Zp b) { return *this = *this * b; }
    constexpr Zp& operator/=(Zp b) { return *this = *this / b; }
    friend constexpr bool operator==(Zp a, Zp b) { return a.value_ == b.value_; }

    constexpr Zp inverse() const {
        // Fermat: a^(P-2)
        std::uint64_t result = 1, base = value_;
        std::uint32_t e = P - 2;
        while (e) {
            if (e & 1U) result = result * base % P;
            base = base * base % P;
            e >>= 1U;
        }
        return from_raw(static_cast<std::uint32_t>(result));
    }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.value_; }

private:
    static constexpr Zp from_raw(std::uint32_t v) {
        Zp z;
        z.value_ = v;
        return z;
    }
    static constexpr std::uint32_t reduce(long long v) {
        long long r = v % static_cast<long long>(P);
        if (r < 0) r += P;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t value_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;
using DefaultPrimeField = Zp<kDefaultPrime>;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational from_integer(long long v) { return Rational(static_cast<long>(v)); }
    static Rational from_rational(const Rational& q) { return q; }
    static std::string to_string(const Rational& x) { return x.get_str(); }
    static constexpr bool exact_rationals = true;
};

template <std::uint32_t P>
struct FieldTraits<Zp<P>> {
    static bool is_zero(const Zp<P>& x) { return x.value() == 0; }
    static Zp<P> from_integer(long long v) { return Zp<P>(v); }
    static Zp<P> from_rational(const Rational& q) {
        mpz_class num = q.get_num() % P, den = q.get_den() % P;
        if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
        return Zp<P>(num.get_si()) / Zp<P>(den.get_si());
    }
    static std::string to_string(const Zp<P>& x) { return std::to_string(x.value()); }
    static constexpr bool exact_rationals = false;
};

template <class F>
bool is_zero(const F& x) {
    return FieldTraits<F>::is_zero(x);
}

} // namespace qit
