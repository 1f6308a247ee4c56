#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "eesurf/errors.hpp"
#include "eesurf/poly.hpp"
#include "eesurf/ratfunc.hpp"

namespace eesurf {

// Small recursive-descent parser for polynomial expressions in the canonical
// ASCII form: "t^3 - 1", "(a^2-a)*z^2 + 3*a*z", "27/4*u + 1". Supports
// + - * / ^ with integer exponents, parentheses, integer literals and named
// variables. Parsed expressions are evaluated directly in a caller-supplied
// algebra (any type with ring ops and division).
namespace expr {

template <class V>
struct Env {
    std::map<std::string, V> vars;
    std::function<V(const bigint&)> from_int;
    // Division guard: by default require dividing by a unit;
    // exact polynomial division is not part of the surface syntax.
    std::function<V(const V&, const V&)> divide;
};

template <class V>
class Parser {
public:
    Parser(const std::string& text, const Env<V>& env) : s_(text), env_(env) {}

    V parse() {
        V v = sum();
        skip_ws();
        if (pos_ != s_.size()) fail(errc::internal, "trailing input in expression: " + s_.substr(pos_));
        return v;
    }

private:
    V sum() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        V acc = product();
        if (neg) acc = env_.from_int(-1) * acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                V rhs = product();
                acc = (c == '+') ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

    V product() {
        V acc = power();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                get();
                V rhs = power();
                acc = (c == '*') ? acc * rhs : env_.divide(acc, rhs);
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                // implicit multiplication: "3t", "2(t+1)"
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    V power() {
        V base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                get();
                neg = true;
            }
            std::string digits = read_digits();
            if (digits.empty()) fail(errc::internal, "missing exponent");
            long e = std::stol(digits);
            V acc = env_.from_int(1);
            V b = base;
            for (long i = 0; i < e; ++i) acc = acc * b;
            if (neg) acc = env_.divide(env_.from_int(1), acc);
            return acc;
        }
        return base;
    }

    V atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            V v = sum();
            skip_ws();
            if (get() != ')') fail(errc::internal, "missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return env_.from_int(bigint(read_digits()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto it = env_.vars.find(name);
            if (it == env_.vars.end()) fail(errc::internal, "unknown variable '" + name + "'");
            return it->second;
        }
        fail(errc::internal, std::string("unexpected character '") + c + "' in expression");
    }

    std::string read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    const std::string& s_;
    const Env<V>& env_;
    size_t pos_ = 0;
};

} // namespace expr

// Parse a univariate polynomial over Q in the named variable.
inline PolyQ parse_poly(const std::string& text, const std::string& var) {
    using V = PolyQ;
    expr::Env<V> env;
    env.vars[var] = PolyQ::gen(var);
    env.from_int = [](const bigint& n) { return PolyQ::constant(Rational(n)); };
    env.divide = [](const V& a, const V& b) {
        if (!b.is_constant() || b.is_zero_poly())
            fail(errc::internal, "division by non-constant in polynomial expression");
        return Rational(1) / b[0] * a;
    };
    return expr::Parser<V>(text, env).parse();
}

// Parse a rational function over Q in the named variable (allows '/').
inline RatFuncQ parse_ratfunc(const std::string& text, const std::string& var) {
    using V = RatFuncQ;
    expr::Env<V> env;
    env.vars[var] = RatFuncQ::gen(var);
    env.from_int = [](const bigint& n) { return RatFuncQ(Rational(n)); };
    env.divide = [](const V& a, const V& b) { return a / b; };
    return expr::Parser<V>(text, env).parse();
}

// Parse a polynomial in `var` whose coefficients live in Q(param),
// e.g. "(a^2-a)*z^2 + 3*a*z" with var="z", param="a".
inline Poly<RatFuncQ> parse_poly_param(const std::string& text, const std::string& var,
                                       const std::string& param) {
    using V = Poly<RatFuncQ>;
    expr::Env<V> env;
    env.vars[var] = V::gen(var);
    env.vars[param] = V::constant(RatFuncQ::gen(param));
    env.from_int = [](const bigint& n) { return V::constant(RatFuncQ(Rational(n))); };
    env.divide = [](const V& a, const V& b) {
        if (!b.is_constant()) fail(errc::internal, "division by non-constant polynomial");
        RatFuncQ inv = RatFuncQ(1) / b[0];
        return inv * a;
    };
    return expr::Parser<V>(text, env).parse();
}

} // namespace eesurf
