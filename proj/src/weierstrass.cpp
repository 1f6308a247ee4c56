#include "eesurf/weierstrass.hpp"

#include <map>
#include <random>
#include <sstream>

#include "eesurf/expr.hpp"

namespace eesurf {

WeierstrassModel::WeierstrassModel(std::string var, RatFuncQ a1, RatFuncQ a2, RatFuncQ a3,
                                   RatFuncQ a4, RatFuncQ a6, int degree_bound)
    : var_(std::move(var)), a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)),
      a4_(std::move(a4)), a6_(std::move(a6)), d_(degree_bound) {
    std_invariants(*this); // rejects identically-zero discriminant
}

bool WeierstrassModel::has_polynomial_coefficients() const {
    return a1_.is_polynomial() && a2_.is_polynomial() && a3_.is_polynomial() &&
           a4_.is_polynomial() && a6_.is_polynomial();
}

StdInvariants std_invariants(const WeierstrassModel& m) {
    StdInvariants s;
    const RatFuncQ &a1 = m.a1(), &a2 = m.a2(), &a3 = m.a3(), &a4 = m.a4(), &a6 = m.a6();
    s.b2 = a1 * a1 + RatFuncQ(4) * a2;
    s.b4 = RatFuncQ(2) * a4 + a1 * a3;
    s.b6 = a3 * a3 + RatFuncQ(4) * a6;
    s.b8 = a1 * a1 * a6 + RatFuncQ(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    s.c4 = s.b2 * s.b2 - RatFuncQ(24) * s.b4;
    s.c6 = -(s.b2 * s.b2 * s.b2) + RatFuncQ(36) * s.b2 * s.b4 - RatFuncQ(216) * s.b6;
    s.disc = -(s.b2 * s.b2 * s.b8) - RatFuncQ(8) * s.b4.pow(3) - RatFuncQ(27) * s.b6 * s.b6 +
             RatFuncQ(9) * s.b2 * s.b4 * s.b6;
    if (s.disc.is_zero_fn())
        fail(errc::degenerate, "discriminant vanishes identically");
    s.j = s.c4.pow(3) / s.disc;
    return s;
}

WeierstrassModel transform_model(const WeierstrassModel& m, const RatFuncQ& u, const RatFuncQ& r,
                                 const RatFuncQ& s, const RatFuncQ& w, int degree_bound) {
    if (u.is_zero_fn()) fail(errc::internal, "transform with u = 0");
    const RatFuncQ &a1 = m.a1(), &a2 = m.a2(), &a3 = m.a3(), &a4 = m.a4(), &a6 = m.a6();
    RatFuncQ b1 = (a1 + RatFuncQ(2) * s) / u;
    RatFuncQ b2 = (a2 - s * a1 + RatFuncQ(3) * r - s * s) / u.pow(2);
    RatFuncQ b3 = (a3 + r * a1 + RatFuncQ(2) * w) / u.pow(3);
    RatFuncQ b4 =
        (a4 - s * a3 + RatFuncQ(2) * r * a2 - (w + r * s) * a1 + RatFuncQ(3) * r * r -
         RatFuncQ(2) * s * w) /
        u.pow(4);
    RatFuncQ b6 = (a6 + r * a4 + r * r * a2 + r.pow(3) - w * a3 - w * w - r * w * a1) / u.pow(6);
    return WeierstrassModel(m.var(), b1, b2, b3, b4, b6, degree_bound);
}

namespace {

PolyQ require_poly_bounded(const RatFuncQ& f, int bound, const char* which) {
    if (!f.is_polynomial())
        fail(errc::degree_violation, std::string(which) + " is not polynomial");
    if (f.num().degree() > bound)
        fail(errc::degree_violation,
             std::string(which) + " exceeds the degree bound " + std::to_string(bound));
    return f.num();
}

} // namespace

WeierstrassModel chart_at_infinity(const WeierstrassModel& m) {
    int d = m.degree_bound();
    auto flip = [&](const RatFuncQ& a, int i, const char* which) {
        PolyQ p = require_poly_bounded(a, i * d, which);
        if (p.is_zero_poly()) return RatFuncQ(0);
        return RatFuncQ(PolyQ(m.var(), p.reversed(i * d).coeffs()));
    };
    return WeierstrassModel(m.var(), flip(m.a1(), 1, "a1"), flip(m.a2(), 2, "a2"),
                            flip(m.a3(), 3, "a3"), flip(m.a4(), 4, "a4"), flip(m.a6(), 6, "a6"),
                            d);
}

WeierstrassModel specialize(const WeierstrassModel& m, const Rational& value) {
    auto ev = [&](const RatFuncQ& f) { return RatFuncQ(f.eval(value)); };
    // constructor reports DEGENERATE when the specialized discriminant is zero
    return WeierstrassModel(m.var(), ev(m.a1()), ev(m.a2()), ev(m.a3()), ev(m.a4()), ev(m.a6()),
                            m.degree_bound());
}

WeierstrassModel hesse_model() {
    RatFuncQ a1(parse_poly("3t", "t"));
    RatFuncQ a3(parse_poly("t^3-1", "t"));
    return WeierstrassModel("t", a1, RatFuncQ(0), a3, RatFuncQ(0), RatFuncQ(0), 1);
}

namespace {

// Bivariate polynomials over Q(param): inner variable X, outer variable Y.
using BiPoly = Poly<Poly<RatFuncQ>>;

BiPoly bp_const(const RatFuncQ& c) { return BiPoly::constant(Poly<RatFuncQ>::constant(c)); }

// Certifies that clearing denominators in the stated substitution carries the
// affine quotient equation (y+v+3w-1) y v = w^3 into the long Weierstrass
// form Y^2 + (3v X + v^3 - v^2) Y = X^3.
bool certify_xprime() {
    RatFuncQ v = RatFuncQ::gen("v");
    BiPoly X = BiPoly::constant(Poly<RatFuncQ>::gen("X"));
    BiPoly Y = BiPoly::gen("Y");
    // substitute y = Y/v^2, w = X/v into (y+v+3w-1) y v - w^3, then scale by v^3
    BiPoly y = bp_const(RatFuncQ(1) / v.pow(2)) * Y;
    BiPoly w = bp_const(RatFuncQ(1) / v) * X;
    BiPoly lhs = (y + bp_const(v) + bp_const(RatFuncQ(3)) * w - bp_const(RatFuncQ(1))) * y *
                     bp_const(v) -
                 w * w * w;
    lhs = bp_const(v.pow(3)) * lhs;
    BiPoly rhs = Y * Y + (bp_const(RatFuncQ(3) * v) * X + bp_const(v.pow(3) - v.pow(2))) * Y -
                 X * X * X;
    return lhs == rhs;
}

// Same check for E_a: (a^2-a) z^2 + 3a x z + a z = x^3 under
// X = (a^2-a) x, Y = (a^2-a)^2 z becomes Y^2 + 3a X Y + (a^3-a^2) Y = X^3.
bool certify_ea() {
    RatFuncQ a = RatFuncQ::gen("a");
    RatFuncQ q = a * a - a;
    BiPoly X = BiPoly::constant(Poly<RatFuncQ>::gen("X"));
    BiPoly Y = BiPoly::gen("Y");
    BiPoly x = bp_const(RatFuncQ(1) / q) * X;
    BiPoly z = bp_const(RatFuncQ(1) / q.pow(2)) * Y;
    BiPoly lhs = bp_const(q) * z * z + bp_const(RatFuncQ(3) * a) * x * z + bp_const(a) * z -
                 x * x * x;
    lhs = bp_const(q.pow(3)) * lhs;
    BiPoly rhs = Y * Y + (bp_const(RatFuncQ(3) * a) * X + bp_const(a.pow(3) - a.pow(2))) * Y -
                 X * X * X;
    return lhs == rhs;
}

} // namespace

WeierstrassModel xprime_model() {
    static const bool certified = certify_xprime();
    if (!certified) fail(errc::internal, "quotient substitution certificate failed");
    RatFuncQ a1(parse_poly("3v", "v"));
    RatFuncQ a3(parse_poly("v^3-v^2", "v"));
    return WeierstrassModel("v", a1, RatFuncQ(0), a3, RatFuncQ(0), RatFuncQ(0), 1);
}

WeierstrassModel ea_model() {
    static const bool certified = certify_ea();
    if (!certified) fail(errc::internal, "E_a substitution certificate failed");
    RatFuncQ a1(parse_poly("3a", "a"));
    RatFuncQ a3(parse_poly("a^3-a^2", "a"));
    return WeierstrassModel("a", a1, RatFuncQ(0), a3, RatFuncQ(0), RatFuncQ(0), 1);
}

std::string ea_model_transform() { return "X = (a^2-a)*x, Y = (a^2-a)^2*z"; }

namespace {

// Trivariate polynomials over Q: t inner, x middle, y outer.
using TriPoly = Poly<Poly<Poly<Rational>>>;

struct TriVars {
    TriPoly t, x, y, one;
};

TriVars tri_vars() {
    using P1 = Poly<Rational>;
    using P2 = Poly<P1>;
    TriVars v;
    v.t = TriPoly::constant(P2::constant(P1::gen("t")));
    v.x = TriPoly::constant(P2::gen("x"));
    v.y = TriPoly::gen("y");
    v.one = TriPoly::constant(P2::constant(P1::constant(Rational(1))));
    return v;
}

TriPoly quotient_lhs(const TriVars& v, long long three) {
    // (y + t^3 + three*x*t - 1) * y * t^3 - (x t)^3
    TriPoly inner = v.y + v.t.pow(3) + TriPoly(three) * v.x * v.t - v.one;
    return inner * v.y * v.t.pow(3) - (v.x * v.t).pow(3);
}

TriPoly quotient_rhs(const TriVars& v) {
    // t^3 * (y^2 + (3 t x + t^3 - 1) y - x^3)
    TriPoly weier = v.y * v.y + (TriPoly(3) * v.t * v.x + v.t.pow(3) - v.one) * v.y -
                    v.x.pow(3);
    return v.t.pow(3) * weier;
}

} // namespace

bool quotient_identity_check() {
    TriVars v = tri_vars();
    return quotient_lhs(v, 3) == quotient_rhs(v);
}

bool quotient_identity_mutated() {
    TriVars v = tri_vars();
    return quotient_lhs(v, 2) == quotient_rhs(v);
}

bool quotient_identity_samples(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 7);
    for (int i = 0; i < count; ++i) {
        Rational x = Rational(num(rng)) / Rational(den(rng));
        Rational y = Rational(num(rng)) / Rational(den(rng));
        Rational t = Rational(num(rng)) / Rational(den(rng));
        Rational t3 = t * t * t;
        Rational lhs = (y + t3 + Rational(3) * x * t - Rational(1)) * y * t3 -
                       (x * t) * (x * t) * (x * t);
        Rational weier = y * y + (Rational(3) * t * x + t3 - Rational(1)) * y - x * x * x;
        if (lhs != t3 * weier) return false;
    }
    return true;
}

std::string WeierstrassModel::to_text() const {
    std::ostringstream os;
    os << "var: " << var_ << "\n";
    os << "d: " << d_ << "\n";
    os << "a1: " << a1_.str() << "\n";
    os << "a2: " << a2_.str() << "\n";
    os << "a3: " << a3_.str() << "\n";
    os << "a4: " << a4_.str() << "\n";
    os << "a6: " << a6_.str() << "\n";
    return os.str();
}

WeierstrassModel WeierstrassModel::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::map<std::string, std::string> kv;
    while (std::getline(is, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        while (!val.empty() && val.front() == ' ') val.erase(val.begin());
        kv[key] = val;
    }
    for (const char* req : {"var", "d", "a1", "a2", "a3", "a4", "a6"})
        if (!kv.count(req)) fail(errc::internal, std::string("missing field ") + req);
    const std::string& var = kv["var"];
    auto coeff = [&](const char* k) { return parse_ratfunc(kv[k], var); };
    return WeierstrassModel(var, coeff("a1"), coeff("a2"), coeff("a3"), coeff("a4"), coeff("a6"),
                            std::stoi(kv["d"]));
}

} // namespace eesurf
