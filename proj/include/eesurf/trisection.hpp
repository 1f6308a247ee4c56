#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eesurf/basechange.hpp"
#include "eesurf/poly.hpp"
#include "eesurf/ratfunc.hpp"

namespace eesurf {

// The degree-3 multisection cut out of the Hesse model by the plane y = a:
// x^3 + A(a,t) x + B(a,t) = 0 with A = -3at and B = -at^3 + a - a^2.
// Constructing it certifies the substitution identity symbolically.
struct TrisectionCurve {
    std::optional<Rational> a_value; // nullopt: formal parameter
    Poly<RatFuncQ> A;                // in t over Q(a)
    Poly<RatFuncQ> B;
    bool degenerate = false; // set at a in {0, 1}; the object stays usable for limits

    PolyQ A_at(const Rational& a) const;
    PolyQ B_at(const Rational& a) const;
};

TrisectionCurve extract_trisection();                  // formal parameter
TrisectionCurve extract_trisection(const Rational& a); // specialized (flagged at 0, 1)

// The discriminant identity 4A^3 + 27B^2 = 27 a^2 (u^2 - 2(a+1) u + (a-1)^2)
// with u = t^3, verified as an identity in Q(a)[t]. Root data of the
// quadratic is exposed through symmetric functions only.
struct DiscFactorization {
    Poly<RatFuncQ> quadratic; // monic in u over Q(a)
    bool certified = false;

    RatFuncQ root_sum() const { return -quadratic[1]; }
    RatFuncQ root_product() const { return quadratic[0]; }
    PolyQ specialize(const Rational& a) const; // quadratic in u over Q
};

DiscFactorization disc_factorization();

// Values of a (with a = 0 excluded) for which u = 1 is a root of the
// discriminant quadratic, i.e. the trisection is tangent to the fibers over
// t^3 = 1. The condition polynomial is a^2 - 4a.
PolyQ tangency_condition();
std::vector<Rational> tangency_parameters();

// Milnor-Jung: delta = (mu + r - 1)/2; PARITY error when mu + r is even.
int delta_invariant(int mu, int r);

// Numerical class on the blown-up plane: alpha C0 + beta F plus eight
// exceptional coefficients, with C0^2 = -1, C0.F = 1, F^2 = 0 and the
// exceptional block (-2)-orthogonal. K = -F in this basis.
struct CurveClass {
    int c0 = 0;
    int f = 0;
    std::array<int, 8> exceptional{};

    int dot(const CurveClass& o) const;
    int self_intersection() const { return dot(*this); }
};

struct ClassGenusReport {
    CurveClass cls;             // 3 C0 + 3 F
    int self_intersection = 0;  // 9
    int p_a = 0;                // 4 by adjunction
    int delta = 0;              // 3 at the ordinary triple point
    int geometric_genus = 0;    // 1
    int genus_by_rh = 0;        // independent Riemann-Hurwitz route
    int torsion_section_meeting = 0; // D . C_i = 3 for the eight nonzero torsion sections
};

ClassGenusReport class_and_genus();

struct PlaneImageReport {
    int degree = 0;        // 9
    int p_a = 0;           // 28
    int delta_ordinary = 0;   // 3 (each of seven ordinary triple points)
    int delta_special = 0;    // 6 (the x^3 + y^6 = 0 point)
    int g = 0;             // 28 - 7*3 - 6 = 1
};

PlaneImageReport plane_image();

} // namespace eesurf
