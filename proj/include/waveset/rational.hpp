#pragma once

// Exact rational scalar. Arbitrary-precision integers, always stored in
// lowest terms with positive denominator. Everything in the core computes
// with these; there is no floating point anywhere on a decision path.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace waveset {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // 2^e for any integer e, exact.
    static Rational pow2(long long e);

    // Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after reduction.
    static std::optional<Rational> parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    BigInt floor() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Exponent e with *this == 2^e, when the value is a dyadic power.
    std::optional<long long> log2_exact() const;
    // Largest e with 2^e <= *this. Requires a positive value.
    long long floor_log2() const;

    std::string str() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    BigInt num_;
    BigInt den_;  // > 0
    void reduce();
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

}  // namespace waveset
