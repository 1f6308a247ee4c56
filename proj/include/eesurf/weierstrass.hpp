#pragma once

#include <string>

#include "eesurf/place.hpp"
#include "eesurf/poly.hpp"
#include "eesurf/ratfunc.hpp"

namespace eesurf {

// Standard quantities attached to a long Weierstrass equation
//   y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over the function field of the base line.
struct StdInvariants {
    RatFuncQ b2, b4, b6, b8;
    RatFuncQ c4, c6;
    RatFuncQ disc;
    RatFuncQ j;

    // degree of j as a branched cover P1 -> P1
    int j_map_degree() const { return j.map_degree(); }
};

// A long Weierstrass model of an elliptic fibration over the projective
// line with coordinate `var`. The degree bound d caps deg a_i <= i*d and
// fixes the rescaling used on the chart at infinity. The discriminant must
// not vanish identically.
class WeierstrassModel {
public:
    WeierstrassModel(std::string var, RatFuncQ a1, RatFuncQ a2, RatFuncQ a3, RatFuncQ a4,
                     RatFuncQ a6, int degree_bound);

    const RatFuncQ& a1() const { return a1_; }
    const RatFuncQ& a2() const { return a2_; }
    const RatFuncQ& a3() const { return a3_; }
    const RatFuncQ& a4() const { return a4_; }
    const RatFuncQ& a6() const { return a6_; }
    int degree_bound() const { return d_; }
    const std::string& var() const { return var_; }

    bool has_polynomial_coefficients() const;

    friend bool operator==(const WeierstrassModel& a, const WeierstrassModel& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
               a.a6_ == b.a6_ && a.d_ == b.d_;
    }

    std::string to_text() const;
    static WeierstrassModel from_text(const std::string& text);

private:
    std::string var_;
    RatFuncQ a1_, a2_, a3_, a4_, a6_;
    int d_;
};

StdInvariants std_invariants(const WeierstrassModel& m);

// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + w.
// The unit u and shifts r, s, w live in the function field of the base.
WeierstrassModel transform_model(const WeierstrassModel& m, const RatFuncQ& u, const RatFuncQ& r,
                                 const RatFuncQ& s, const RatFuncQ& w, int degree_bound);

// The chart swap s = 1/t with x' = s^2 x, y' = s^3 y (in the line bundle
// normalization of weight i*d on a_i). Requires polynomial coefficients of
// degree <= i*d; an involution on such models.
WeierstrassModel chart_at_infinity(const WeierstrassModel& m);

// Substitute a rational value of the base variable; the result is a model
// with constant coefficients. DEGENERATE when the discriminant vanishes.
WeierstrassModel specialize(const WeierstrassModel& m, const Rational& value);

// y^2 + (3t x + t^3 - 1) y = x^3, the Weierstrass model of the Hesse pencil.
WeierstrassModel hesse_model();

// Y^2 + (3v X + v^3 - v^2) Y = X^3, the relative quotient of the Hesse model
// by the order-3 symmetry. Construction certifies symbolically that the
// substitution X = v w, Y = v^2 y carries (y+v+3w-1) y v = w^3 to this form.
WeierstrassModel xprime_model();

// Weierstrass form of the plane cubic (a^2-a) z^2 + 3a x z + a z = x^3 over
// Q(a): Y^2 + 3a X Y + (a^3-a^2) Y = X^3 via X = (a^2-a) x, Y = (a^2-a)^2 z
// (certified at construction).
WeierstrassModel ea_model();

// The textual description of the coordinate change used by ea_model.
std::string ea_model_transform();

// Verifies (y + t^3 + 3xt - 1) y t^3 - (xt)^3 = t^3 (y^2 + (3tx + t^3 - 1) y - x^3)
// as an identity in Q[x, y, t]: the defining check that u = x^3, v = t^3,
// w = xt present the order-3 quotient of the Hesse model.
bool quotient_identity_check();

// Mutation control: the same identity with 3w replaced by 2w must fail.
bool quotient_identity_mutated();

// Spot check of the identity at `count` pseudo-random rational points.
bool quotient_identity_samples(int count, unsigned seed);

} // namespace eesurf
