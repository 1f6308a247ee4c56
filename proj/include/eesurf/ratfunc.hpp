#pragma once

#include <string>
#include <utility>

#include "eesurf/poly.hpp"

namespace eesurf {

// Rational function num/den over a coefficient field K. The denominator is
// kept monic and coprime to the numerator.
template <class K>
class RatFunc {
public:
    RatFunc() : num_(Poly<K>{}), den_(Poly<K>::constant(K(1))) {}
    RatFunc(long long n) : num_(Poly<K>::constant(K(n))), den_(Poly<K>::constant(K(1))) {}
    explicit RatFunc(K c) : num_(Poly<K>::constant(std::move(c))), den_(Poly<K>::constant(K(1))) {}
    RatFunc(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(K(1))) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc gen(std::string var) { return RatFunc(Poly<K>::gen(std::move(var))); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero_fn() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const {
        if (!is_constant()) fail(errc::internal, "rational function is not constant");
        if (num_.is_zero_poly()) return K(0);
        return num_[0] / den_[0];
    }
    const std::string& var() const { return num_.var().empty() ? den_.var() : num_.var(); }

    // deg num - deg den; degree of the zero function is INT_MIN-ish sentinel unused.
    int degree_difference() const { return num_.degree() - den_.degree(); }
    // Degree as a branched cover P1 -> P1.
    int map_degree() const { return std::max(num_.degree(), den_.degree()); }

    friend RatFunc operator-(const RatFunc& f) { return RatFunc(-f.num_, f.den_, unreduced_tag{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero_fn()) fail(errc::internal, "rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc pow(int e) const {
        if (e < 0) return RatFunc(den_, num_).pow(-e);
        RatFunc r(1);
        RatFunc base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    // Evaluate at a point of K; the point must not be a pole.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (is_zero(d)) fail(errc::degenerate, "evaluation at a pole");
        return num_.eval(x) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.num_terms() > 1 ? "(" + num_.str() + ")" : num_.str();
        return n + "/(" + den_.str() + ")";
    }

private:
    struct unreduced_tag {};
    RatFunc(Poly<K> num, Poly<K> den, unreduced_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (den_.is_zero_poly()) fail(errc::internal, "zero denominator in rational function");
        if (num_.is_zero_poly()) {
            den_ = Poly<K>::constant(K(1));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K lead_inv = K(1) / den_.lead();
        num_ = lead_inv * num_;
        den_ = lead_inv * den_;
    }

    Poly<K> num_;
    Poly<K> den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
    return f.is_zero_fn();
}
template <class K>
bool is_one(const RatFunc<K>& f) {
    return f.is_polynomial() && is_one(f.num());
}

using RatFuncQ = RatFunc<Rational>;

inline CoeffRepr coeff_repr(const RatFuncQ& f) {
    if (f.is_constant()) return coeff_repr(f.constant_value());
    return {f.str(), true};
}

} // namespace eesurf
