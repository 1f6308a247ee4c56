#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "eesurf/errors.hpp"

namespace eesurf {

using bigint = boost::multiprecision::cpp_int;

// Exact rational number with arbitrary-precision numerator and positive
// denominator, always stored in lowest terms.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(bigint n) : num_(std::move(n)), den_(1) {}
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(errc::internal, "rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        bigint lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) fail(errc::internal, "inverse of zero");
        return Rational(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // Floor of num/den as a bigint.
    bigint floor() const {
        bigint q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    // Value mod 2Z normalized to [0, 2); used by discriminant quadratic forms.
    Rational mod2() const {
        bigint twice_den = 2 * den_;
        bigint r = num_ % twice_den;
        if (r < 0) r += twice_den;
        return Rational(r, den_);
    }
    // Value mod Z normalized to [0, 1); used by the bilinear pairing.
    Rational mod1() const {
        bigint r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_);
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "p" or "p/q". Throws on malformed input or zero denominator.
    static Rational parse(const std::string& text);

private:
    void normalize() {
        if (den_ == 0) fail(errc::internal, "zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    bigint num_;
    bigint den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_one(const Rational& r) { return r.is_one(); }

} // namespace eesurf
