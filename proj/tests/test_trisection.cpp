#include <doctest.h>

#include <random>

#include "eesurf/expr.hpp"
#include "eesurf/factor.hpp"
#include "eesurf/trisection.hpp"

using namespace eesurf;

TEST_CASE("extract_trisection formal coefficients") {
    TrisectionCurve c = extract_trisection();
    CHECK(c.A == parse_poly_param("-3*a*t", "t", "a"));
    CHECK(c.B == parse_poly_param("-a*t^3 + a - a^2", "t", "a"));
    CHECK(!c.degenerate);
}

TEST_CASE("specializations of the trisection") {
    TrisectionCurve c4 = extract_trisection(Rational(4));
    CHECK(!c4.degenerate);
    CHECK(c4.B_at(Rational(4)) == parse_poly("-4t^3 - 12", "t"));
    CHECK(c4.A_at(Rational(4)) == parse_poly("-12t", "t"));

    TrisectionCurve c1 = extract_trisection(Rational(1));
    CHECK(c1.degenerate);
    CHECK(c1.B_at(Rational(1)) == parse_poly("-t^3", "t"));

    TrisectionCurve c0 = extract_trisection(Rational(0));
    CHECK(c0.degenerate);
}

TEST_CASE("substitution identity holds at random rational points") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 5);
    TrisectionCurve c = extract_trisection();
    for (int i = 0; i < 20; ++i) {
        Rational a = Rational(num(rng)) / Rational(den(rng));
        Rational t = Rational(num(rng)) / Rational(den(rng));
        Rational x = Rational(num(rng)) / Rational(den(rng));
        Rational t3 = t * t * t;
        Rational lhs = a * a + (Rational(3) * t * x + t3 - Rational(1)) * a - x * x * x;
        Rational A = c.A_at(a).eval(t);
        Rational B = c.B_at(a).eval(t);
        CHECK(lhs == -(x * x * x + A * x + B));
    }
}

TEST_CASE("discriminant factorization certificate") {
    DiscFactorization d = disc_factorization();
    CHECK(d.certified);
    CHECK(d.root_sum() == parse_ratfunc("2a+2", "a"));
    CHECK(d.root_product() == parse_ratfunc("(a-1)^2", "a"));

    // a = 4: u^2 - 10u + 9 = (u-1)(u-9); the root u=1 certifies tangency
    PolyQ q4 = d.specialize(Rational(4));
    CHECK(q4 == parse_poly("u^2 - 10u + 9", "u"));
    auto fac = factor_poly(q4);
    REQUIRE(fac.fully_factored());
    CHECK(fac.irreducible.size() == 2);
    CHECK(fac.irreducible[0].poly == parse_poly("u-1", "u"));
    CHECK(fac.irreducible[1].poly == parse_poly("u-9", "u"));

    // a = 1: u^2 - 4u with roots {0, 4}
    CHECK(d.specialize(Rational(1)) == parse_poly("u^2-4u", "u"));

    // same quadratic as the branch-point quadratic of E_a
    BranchQuadratic bq = branch_points_of_Ea();
    CHECK(d.quadratic == bq.quadratic);
}

TEST_CASE("tangency parameters") {
    CHECK(tangency_condition() == parse_poly("a^2-4a", "a"));
    auto params = tangency_parameters();
    REQUIRE(params.size() == 1);
    CHECK(params[0] == Rational(4));
}

TEST_CASE("delta invariant") {
    CHECK(delta_invariant(4, 3) == 3);   // ordinary triple point
    CHECK(delta_invariant(10, 3) == 6);  // x^3 + y^6
    CHECK(delta_invariant(1, 2) == 1);   // node
    CHECK_THROWS_AS(delta_invariant(4, 2), calc_error);
}

TEST_CASE("curve class and genus chain") {
    ClassGenusReport r = class_and_genus();
    CHECK(r.cls.c0 == 3);
    CHECK(r.cls.f == 3);
    CHECK(r.self_intersection == 9);
    CHECK(r.p_a == 4);
    CHECK(r.delta == 3);
    CHECK(r.geometric_genus == 1);
    CHECK(r.genus_by_rh == 1);
    CHECK(r.torsion_section_meeting == 3);
}

TEST_CASE("intersection pairing sanity") {
    CurveClass c0;
    c0.c0 = 1;
    CurveClass f;
    f.f = 1;
    CHECK(c0.dot(c0) == -1);
    CHECK(c0.dot(f) == 1);
    CHECK(f.dot(f) == 0);
    CurveClass e;
    e.exceptional[3] = 1;
    CHECK(e.dot(e) == -2);
    CHECK(e.dot(c0) == 0);
    // symmetry on a few random classes
    std::mt19937_64 rng(8);
    for (int i = 0; i < 10; ++i) {
        CurveClass x, y;
        x.c0 = (int)(rng() % 7) - 3;
        x.f = (int)(rng() % 7) - 3;
        y.c0 = (int)(rng() % 7) - 3;
        y.f = (int)(rng() % 7) - 3;
        for (int j = 0; j < 8; ++j) {
            x.exceptional[j] = (int)(rng() % 5) - 2;
            y.exceptional[j] = (int)(rng() % 5) - 2;
        }
        CHECK(x.dot(y) == y.dot(x));
    }
}

TEST_CASE("plane image of the trisection") {
    PlaneImageReport r = plane_image();
    CHECK(r.degree == 9);
    CHECK(r.p_a == 28);
    CHECK(r.delta_ordinary == 3);
    CHECK(r.delta_special == 6);
    CHECK(r.g == 1);
}
