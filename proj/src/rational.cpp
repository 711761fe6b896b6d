#include "waveset/rational.hpp"

#include <stdexcept>

namespace waveset {

namespace mp = boost::multiprecision;

void Rational::reduce() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

Rational Rational::pow2(long long e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e >= 0 ? Rational(std::move(p)) : Rational(BigInt(1), std::move(p));
}

BigInt Rational::floor() const {
    if (den_ == 1) return num_;
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0) q -= 1;
    return q;
}

std::optional<long long> Rational::log2_exact() const {
    if (num_ <= 0) return std::nullopt;
    // In lowest terms a dyadic power has one side equal to 1 or a 2-power
    // and the other equal to 1.
    auto pow_of_two = [](const BigInt& x) { return x == 1 || mp::lsb(x) == mp::msb(x); };
    if (!pow_of_two(num_) || !pow_of_two(den_)) return std::nullopt;
    long long e = (num_ == 1 ? 0 : static_cast<long long>(mp::msb(num_))) -
                  (den_ == 1 ? 0 : static_cast<long long>(mp::msb(den_)));
    return e;
}

long long Rational::floor_log2() const {
    if (num_ <= 0) throw std::domain_error("floor_log2 of non-positive rational");
    long long e = static_cast<long long>(mp::msb(num_)) - static_cast<long long>(mp::msb(den_));
    if (pow2(e) > *this) --e;
    return e;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    auto strip = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = strip(text);
    if (text.empty()) return std::nullopt;

    auto parse_int = [&](std::string_view v) -> std::optional<BigInt> {
        v = strip(v);
        bool neg = false;
        if (!v.empty() && (v.front() == '-' || v.front() == '+')) {
            neg = v.front() == '-';
            v.remove_prefix(1);
        }
        if (v.empty()) return std::nullopt;
        BigInt x = 0;
        for (char c : v) {
            if (c < '0' || c > '9') return std::nullopt;
            x = x * 10 + (c - '0');
        }
        return neg ? BigInt(-x) : x;
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace waveset
