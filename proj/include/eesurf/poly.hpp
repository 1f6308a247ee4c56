#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "eesurf/errors.hpp"
#include "eesurf/rational.hpp"

namespace eesurf {

// Dense univariate polynomial over a commutative coefficient ring K.
// Coefficients are stored lowest degree first; the top coefficient is
// nonzero unless the polynomial is zero (empty vector). Ring operations
// work for any K; division, gcd and friends additionally need K to be a
// field (they are only instantiated when used).
//
// A polynomial carries the name of its variable. Constants may carry an
// empty name and combine with anything; mixing two distinct nonempty
// names is an error.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(long long n) : Poly("", K(n)) {}
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::string var, K constant) : var_(std::move(var)) {
        if (!is_zero(constant)) c_.push_back(std::move(constant));
    }
    Poly(std::string var, std::vector<K> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    // The monomial c * var^k.
    static Poly monomial(std::string var, K c, int k) {
        Poly p(std::move(var));
        if (!is_zero(c)) {
            p.c_.assign(k + 1, K(0));
            p.c_[k] = std::move(c);
        }
        return p;
    }
    static Poly gen(std::string var) { return monomial(var, K(1), 1); }
    static Poly constant(K c) { return Poly("", std::move(c)); }

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& operator[](int i) const {
        static const K zero{0};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[i];
    }
    const K& lead() const {
        if (c_.empty()) fail(errc::internal, "leading coefficient of zero polynomial");
        return c_.back();
    }
    int num_terms() const {
        int n = 0;
        for (const K& c : c_)
            if (!is_zero(c)) ++n;
        return n;
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend Poly operator-(const Poly& p) {
        Poly r(p.var_);
        r.c_.reserve(p.c_.size());
        for (const K& c : p.c_) r.c_.push_back(-c);
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(joint_var(a, b));
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(joint_var(a, b));
        if (a.c_.empty() || b.c_.empty()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const K& c, Poly p) {
        for (K& x : p.c_) x = c * x;
        p.trim();
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_; // variable names of constants are immaterial
    }

    Poly pow(int e) const {
        if (e < 0) fail(errc::internal, "negative polynomial power");
        Poly r = constant(K(1));
        Poly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        if (r.var_.empty()) r.var_ = var_;
        return r;
    }

    // Multiply by var^k.
    Poly shifted(int k) const {
        if (c_.empty() || k == 0) return *this;
        Poly r(var_);
        r.c_.assign(c_.size() + k, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // x^n * p(1/x) for n >= degree: coefficient reversal padded to degree n.
    Poly reversed(int n) const {
        if (degree() > n) fail(errc::degree_violation, "reversal bound below degree");
        Poly r(var_);
        r.c_.assign(n + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Horner evaluation in any algebra V, embedding coefficients via `embed`.
    template <class V, class Embed>
    V eval_gen(const V& x, Embed embed) const {
        V acc = embed(K(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
        return acc;
    }

    Poly derivative() const {
        Poly r(var_);
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = K(static_cast<long long>(i)) * c_[i];
        r.trim();
        return r;
    }

    // --- field-coefficient operations ---

    Poly monic() const {
        if (c_.empty()) return *this;
        K inv = K(1) / c_.back();
        return inv * *this;
    }

    // Euclidean division; remainder degree < divisor degree.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.c_.empty()) fail(errc::internal, "polynomial division by zero");
        Poly q(joint_var(a, b));
        Poly r = a;
        if (r.var_.empty()) r.var_ = q.var_;
        int db = b.degree();
        if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, K(0));
        K lead_inv = K(1) / b.c_.back();
        while (!r.c_.empty() && r.degree() >= db) {
            int k = r.degree() - db;
            K f = r.c_.back() * lead_inv;
            q.c_[k] = f;
            for (int i = 0; i <= db; ++i) r.c_[k + i] = r.c_[k + i] - f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.c_.empty()) fail(errc::internal, "inexact polynomial division");
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.c_.empty()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Order of vanishing at the monic polynomial p (exact multiplicity).
    int multiplicity_of(const Poly& p) const {
        if (c_.empty()) fail(errc::internal, "multiplicity of zero polynomial");
        int m = 0;
        Poly f = *this;
        while (true) {
            auto [q, r] = divmod(f, p);
            if (!r.c_.empty()) return m;
            ++m;
            f = std::move(q);
        }
    }

    std::string str() const;

private:
    static std::string joint_var(const Poly& a, const Poly& b) {
        if (a.var_.empty()) return b.var_;
        if (b.var_.empty() || a.var_ == b.var_) return a.var_;
        fail(errc::internal, "mixed polynomial variables: " + a.var_ + " vs " + b.var_);
    }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::string var_;
    std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
    return p.is_zero_poly();
}
template <class K>
bool is_one(const Poly<K>& p) {
    return p.degree() == 0 && is_one(p[0]);
}

// Printing support. coeff_repr(K) yields the textual form of a coefficient
// plus whether it must be parenthesized inside a product.
struct CoeffRepr {
    std::string text;
    bool composite = false; // needs parentheses when multiplying a power
};

inline CoeffRepr coeff_repr(const Rational& r) { return {r.str(), r.den() != 1}; }

template <class K>
CoeffRepr coeff_repr(const Poly<K>& p) {
    return {p.str(), p.degree() > 0 || p.num_terms() > 1};
}

template <class K>
std::string Poly<K>::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (is_zero(c_[i])) continue;
        CoeffRepr cr = coeff_repr(c_[i]);
        bool negated = false;
        std::string body = cr.text;
        if (!cr.composite && !body.empty() && body[0] == '-') {
            negated = true;
            body = body.substr(1);
        }
        if (out.empty()) {
            if (negated) out += "-";
        } else {
            out += negated ? " - " : " + ";
        }
        std::string power;
        if (i > 0) {
            power = var_.empty() ? std::string("x") : var_;
            if (i > 1) power += "^" + std::to_string(i);
        }
        bool unit_coeff = (body == "1") && !cr.composite;
        if (i == 0) {
            out += cr.composite ? "(" + cr.text + ")" : body;
        } else if (unit_coeff) {
            out += power;
        } else {
            out += (cr.composite ? "(" + cr.text + ")" : body) + "*" + power;
        }
    }
    return out;
}

using PolyQ = Poly<Rational>;

} // namespace eesurf
