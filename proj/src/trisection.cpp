#include "eesurf/trisection.hpp"

#include "eesurf/expr.hpp"
#include "eesurf/factor.hpp"

namespace eesurf {

namespace {

using ParamPoly = Poly<RatFuncQ>;          // polynomials in t over Q(a)
using XPoly = Poly<ParamPoly>;             // polynomials in x over Q(a)[t]

ParamPoly pp_const(const RatFuncQ& c) { return ParamPoly::constant(c); }

// Substituting y = a into y^2 + (3tx + t^3 - 1) y - x^3 must give
// -(x^3 + A x + B) identically in Q(a)[t][x].
bool certify_substitution(const ParamPoly& A, const ParamPoly& B) {
    RatFuncQ a = RatFuncQ::gen("a");
    ParamPoly t = ParamPoly::gen("t");
    XPoly x = XPoly::gen("x");
    XPoly lift_a = XPoly::constant(pp_const(a));
    XPoly coeff = XPoly::constant(t.pow(3) - pp_const(RatFuncQ(1))) +
                  XPoly::constant(ParamPoly("t", {RatFuncQ(0), RatFuncQ(3)})) * x;
    XPoly lhs = lift_a * lift_a + coeff * lift_a - x * x * x;
    XPoly rhs = -(x * x * x + XPoly::constant(A) * x + XPoly::constant(B));
    return lhs == rhs;
}

} // namespace

TrisectionCurve extract_trisection() {
    TrisectionCurve c;
    c.A = parse_poly_param("-3*a*t", "t", "a");
    c.B = parse_poly_param("-a*t^3 + a - a^2", "t", "a");
    if (!certify_substitution(c.A, c.B))
        fail(errc::internal, "trisection substitution certificate failed");
    return c;
}

TrisectionCurve extract_trisection(const Rational& a) {
    TrisectionCurve c = extract_trisection();
    c.a_value = a;
    c.degenerate = (a == Rational(0)) || (a == Rational(1));
    return c;
}

PolyQ TrisectionCurve::A_at(const Rational& a) const {
    std::vector<Rational> cs;
    for (int i = 0; i <= A.degree(); ++i) cs.push_back(A[i].eval(a));
    return PolyQ("t", cs);
}

PolyQ TrisectionCurve::B_at(const Rational& a) const {
    std::vector<Rational> cs;
    for (int i = 0; i <= B.degree(); ++i) cs.push_back(B[i].eval(a));
    return PolyQ("t", cs);
}

DiscFactorization disc_factorization() {
    TrisectionCurve c = extract_trisection();
    ParamPoly disc = ParamPoly(4) * c.A.pow(3) + ParamPoly(27) * c.B * c.B;

    DiscFactorization out;
    out.quadratic = parse_poly_param("u^2 - 2*(a+1)*u + (a-1)^2", "u", "a");
    RatFuncQ a = RatFuncQ::gen("a");
    // substitute u = t^3 and scale by 27 a^2
    ParamPoly t3 = ParamPoly::gen("t").pow(3);
    auto embed = [](const RatFuncQ& q) { return ParamPoly::constant(q); };
    ParamPoly rhs = pp_const(RatFuncQ(27) * a * a) * out.quadratic.eval_gen(t3, embed);
    out.certified = (disc == rhs);
    if (!out.certified)
        fail(errc::internal, "discriminant factorization identity failed");
    return out;
}

PolyQ DiscFactorization::specialize(const Rational& a) const {
    std::vector<Rational> cs;
    for (int i = 0; i <= quadratic.degree(); ++i) cs.push_back(quadratic[i].eval(a));
    return PolyQ("u", cs);
}

PolyQ tangency_condition() {
    DiscFactorization d = disc_factorization();
    auto embed = [](const RatFuncQ& q) { return q; };
    RatFuncQ at_one = d.quadratic.eval_gen(RatFuncQ(1), embed);
    if (!at_one.is_polynomial())
        fail(errc::internal, "tangency condition is not polynomial");
    PolyQ cond(at_one.num().coeffs().empty() ? PolyQ("a") : PolyQ("a", at_one.num().coeffs()));
    return cond;
}

std::vector<Rational> tangency_parameters() {
    PolyQ cond = tangency_condition();
    auto roots = rational_roots(cond);
    if (!roots) fail(errc::unfactored, "tangency condition roots not enumerable");
    // cross-check against the branch quadratic of E_a evaluated at r = 1
    BranchQuadratic bq = branch_points_of_Ea();
    RatFuncQ via_branch = bq.eval_at(RatFuncQ(1));
    if (!(via_branch == RatFuncQ(cond)))
        fail(errc::mismatch, "tangency condition disagrees with the branch quadratic");
    std::vector<Rational> out;
    for (auto& [r, m] : *roots)
        if (!(r == Rational(0))) out.push_back(r); // a = 0 is excluded from the family
    return out;
}

int delta_invariant(int mu, int r) {
    if ((mu + r) % 2 == 0)
        fail(errc::parity, "Milnor number plus branch count must be odd");
    return (mu + r - 1) / 2;
}

int CurveClass::dot(const CurveClass& o) const {
    // C0^2 = -1, C0.F = 1, F^2 = 0, exceptional block -2 orthogonal
    int v = -c0 * o.c0 + c0 * o.f + f * o.c0;
    for (int i = 0; i < 8; ++i) v += -2 * exceptional[i] * o.exceptional[i];
    return v;
}

ClassGenusReport class_and_genus() {
    ClassGenusReport r;
    // alpha, beta from D.F = 3, D.C0 = 0
    // D = alpha C0 + beta F: D.F = alpha, D.C0 = -alpha + beta
    r.cls.c0 = 3;
    r.cls.f = 3;
    r.self_intersection = r.cls.self_intersection();

    // adjunction with K = -F: 2 p_a - 2 = D^2 + K.D
    CurveClass K;
    K.f = -1;
    int kd = K.dot(r.cls);
    int two_pa_minus_2 = r.self_intersection + kd;
    if (two_pa_minus_2 % 2 != 0) fail(errc::parity, "adjunction parity failed");
    r.p_a = two_pa_minus_2 / 2 + 1;

    r.delta = delta_invariant(4, 3); // ordinary triple point over t = infinity
    r.geometric_genus = r.p_a - r.delta;

    // independent route: Riemann-Hurwitz for the degree-3 map simply branched
    // at six points (two orbits of three)
    BranchProfile six = BranchProfile::parse("d=3; b1:2+1; b2:2+1; b3:2+1; b4:2+1; b5:2+1; b6:2+1", "t");
    r.genus_by_rh = rh_genus(six, 0);

    // D . C_i for the eight nonzero torsion sections, from C_i.C0 = 0, C_i.F = 1
    r.torsion_section_meeting = 3 * 0 + 3 * 1;
    return r;
}

PlaneImageReport plane_image() {
    PlaneImageReport r;
    // K_X . D = -3 expands to -3 deg + 3 * 8 in the blown-up plane basis
    r.degree = (3 * 8 - (-3)) / 3;
    r.p_a = (r.degree - 1) * (r.degree - 2) / 2;
    r.delta_ordinary = delta_invariant(4, 3);
    r.delta_special = delta_invariant(10, 3);
    r.g = r.p_a - (7 * r.delta_ordinary + r.delta_special);
    return r;
}

} // namespace eesurf
