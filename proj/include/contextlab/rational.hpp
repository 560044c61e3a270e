#pragma once

/*
 * Exact rational scalar backed by signed 128-bit integers.
 *
 * Values are always kept reduced with a positive denominator, so two
 * equal rationals have identical representations and operator== is a
 * plain field comparison. Every arithmetic step is checked; an
 * intermediate that does not fit in 128 bits throws OverflowError
 * instead of wrapping.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace contextlab {

using int128 = __int128;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational: addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("rational: subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational: multiplication overflow");
    return r;
}

inline int128 checked_neg(int128 a) { return checked_sub(0, a); }

inline int128 abs128(int128 a) { return a < 0 ? checked_neg(a) : a; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // work with negative values so the minimum is representable
    std::string digits;
    int128 n = neg ? v : -v;
    while (n != 0) {
        int d = static_cast<int>(-(n % 10));
        digits.push_back(static_cast<char>('0' + d));
        n /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

inline int128 parse_int128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty integer");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("rational: malformed integer '" + std::string(s) + "'");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("rational: malformed integer '" + std::string(s) + "'");
        v = checked_add(checked_mul(v, 10), c - '0');
    }
    return neg ? checked_neg(v) : v;
}

}  // namespace detail

class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)

    Rational(int128 num, int128 den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = detail::checked_neg(num);
            den = detail::checked_neg(den);
        }
        int128 g = detail::gcd128(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Rational from_int128(int128 n) { return Rational(n, int128{1}); }

    /// Parses "p" or "p/q" (optional sign on either part).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return from_int128(detail::parse_int128(text));
        return Rational(detail::parse_int128(text.substr(0, slash)), detail::parse_int128(text.substr(slash + 1)));
    }

    [[nodiscard]] int128 num() const { return num_; }
    [[nodiscard]] int128 den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }
    [[nodiscard]] int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    [[nodiscard]] std::string to_string() const {
        if (den_ == 1) return detail::int128_to_string(num_);
        return detail::int128_to_string(num_) + "/" + detail::int128_to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // reduce cross terms by the denominator gcd first to delay overflow
        int128 g = detail::gcd128(a.den_, b.den_);
        int128 lhs = detail::checked_mul(a.num_, b.den_ / g);
        int128 rhs = detail::checked_mul(b.num_, a.den_ / g);
        return Rational(detail::checked_add(lhs, rhs), detail::checked_mul(a.den_ / g, b.den_));
    }

    friend Rational operator-(const Rational& a) { return raw(detail::checked_neg(a.num_), a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = detail::gcd128(a.num_, b.den_);
        int128 g2 = detail::gcd128(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return raw(detail::checked_mul(a.num_ / g1, b.num_ / g2), detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        Rational inv = b.num_ < 0 ? raw(detail::checked_neg(b.den_), detail::checked_neg(b.num_)) : raw(b.den_, b.num_);
        return a * inv;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int128 lhs = detail::checked_mul(a.num_, b.den_);
        int128 rhs = detail::checked_mul(b.num_, a.den_);
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    // already reduced, positive denominator
    static Rational raw(int128 num, int128 den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }

    int128 num_ = 0;
    int128 den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace contextlab
