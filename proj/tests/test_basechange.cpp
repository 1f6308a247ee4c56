#include <doctest.h>

#include "eesurf/basechange.hpp"
#include "eesurf/expr.hpp"

using namespace eesurf;

namespace {

RatFuncQ phi(const std::string& s) { return parse_ratfunc(s, "u"); }

std::string types_of(const FiberConfig& c) {
    std::string out;
    for (auto& [t, n] : c.type_multiset()) out += std::to_string(n) + t.str() + " ";
    return out;
}

} // namespace

TEST_CASE("pullback of X' by u^3 is the Hesse configuration") {
    WeierstrassModel pulled = pullback_model(xprime_model(), phi("u^3"));
    FiberConfig c = full_config(pulled);
    CHECK(c.total_euler() == 12);
    CHECK(c.summary() == "4I3");
    CHECK(types_of(c) == "4I3 ");
}

TEST_CASE("quadratic base change of an I3 place gives I6") {
    // hesse has I3 over t=1; u^2 with t = 1 unramified... use t = u^2 shifted:
    // branch at t=1 via phi = u^2 + 1
    WeierstrassModel pulled = pullback_model(hesse_model(), phi("u^2+1"));
    FiberConfig c = full_config(pulled);
    // fiber over u = 0 (above t=1) is I6
    bool found = false;
    for (const auto& f : c.entries)
        if (f.label == "u" && f.type == KodairaType::I(6)) found = true;
    CHECK(found);
}

TEST_CASE("IV* place under a triple cover becomes smooth") {
    WeierstrassModel pulled = pullback_model(xprime_model(), phi("u^3"));
    CHECK(tate_local(pulled, Place(parse_poly("u", "u"))).type == KodairaType::I(0));
}

TEST_CASE("rh_genus on the named profiles") {
    CHECK(rh_genus(profile_Ya_generic(), 0) == 1);
    CHECK(rh_genus(profile_Y0(), 0) == 1);
    CHECK(rh_genus(profile_Y4(), 0) == 1);
    CHECK(rh_genus(profile_Zprime(), 0) == 0);
    // identity cover
    BranchProfile id = BranchProfile::parse("d=1", "v");
    CHECK(rh_genus(id, 0) == 0);
    CHECK(rh_genus(id, 1) == 1);
    // odd total is rejected
    BranchProfile bad = BranchProfile::parse("d=2; 0:2", "v");
    CHECK_THROWS_AS(rh_genus(bad, 0), calc_error);
}

TEST_CASE("transition table") {
    CHECK(transition(KodairaType::I(3), 2) == KodairaType::I(6));
    CHECK(transition(KodairaType::I(1), 3) == KodairaType::I(3));
    CHECK(transition(KodairaType::make(FiberClass::IVstar), 2) == KodairaType::make(FiberClass::IV));
    CHECK(transition(KodairaType::make(FiberClass::IVstar), 3) == KodairaType::I(0));
    CHECK(transition(KodairaType::make(FiberClass::IVstar), 1) == KodairaType::make(FiberClass::IVstar));
    CHECK(transition(KodairaType::I(0), 5) == KodairaType::I(0));
    CHECK_THROWS_AS(transition(KodairaType::make(FiberClass::II), 2), calc_error);
    CHECK_THROWS_AS(transition(KodairaType::make(FiberClass::IVstar), 4), calc_error);
}

TEST_CASE("transported configurations of the paper families") {
    FiberConfig xp = full_config(xprime_model());

    FiberConfig ya = transported_config(xp, profile_Ya_generic());
    CHECK(ya.genus == 1);
    CHECK(types_of(ya) == "4I3 ");
    SurfaceInvariants sa = surface_invariants(ya);
    CHECK(sa.p_g == 1);
    CHECK(sa.q == 1);
    CHECK(sa.h11 == 12);
    CHECK(sa.classification == "elliptic-elliptic");

    FiberConfig y4 = transported_config(xp, profile_Y4());
    CHECK(y4.genus == 1);
    CHECK(y4.summary() == "2I3 + I6");
    CHECK(surface_invariants(y4).deg_l == 1);

    FiberConfig y0 = transported_config(xp, profile_Y0());
    CHECK(y0.genus == 1);
    CHECK(y0.summary() == "I3 + I9");
    CHECK(surface_invariants(y0).deg_l == 1);

    FiberConfig zp = transported_config(xp, profile_Zprime());
    CHECK(zp.genus == 0);
    CHECK(zp.summary() == "4I3 + IV + IV*");
    SurfaceInvariants sz = surface_invariants(zp);
    CHECK(sz.chi == 24);
    CHECK(sz.deg_l == 2);
    CHECK(sz.classification == "K3");
}

TEST_CASE("trivial profile transport is the identity") {
    FiberConfig xp = full_config(xprime_model());
    BranchProfile id = BranchProfile::parse("d=1", "v");
    FiberConfig same = transported_config(xp, id);
    CHECK(same.type_multiset() == xp.type_multiset());
    CHECK(same.genus == 0);
}

TEST_CASE("euler numbers transform with the table corrections") {
    FiberConfig xp = full_config(xprime_model());
    // d * e(input) = 36; IV* -> I0 under e=3 absorbs 24, I1 -> I3 absorbs 0, ...
    FiberConfig ya = transported_config(xp, profile_Ya_generic());
    CHECK(ya.total_euler() == 12);
    CHECK(transported_config(xp, profile_Y4()).total_euler() == 12);
    CHECK(transported_config(xp, profile_Y0()).total_euler() == 12);
    CHECK(transported_config(xp, profile_Zprime()).total_euler() == 24);
}

TEST_CASE("ramification profiles computed from phi") {
    BranchProfile p3 = ramification_profile(phi("u^3"));
    CHECK(p3.degree == 3);
    CHECK(p3.str() == "d=3; 0:3; inf:3");

    BranchProfile p2 = ramification_profile(phi("u^2"));
    CHECK(p2.str() == "d=2; 0:2; inf:2");

    // a map with finite critical values: phi = u^2 + 1 branches over 1 and inf
    BranchProfile ps = ramification_profile(phi("u^2+1"));
    CHECK(ps.str() == "d=2; 1:2; inf:2");
}

TEST_CASE("cross validation: symbolic vs combinatorial") {
    CrossValidation a =
        cross_validate(xprime_model(), phi("u^3"), BranchProfile::parse("d=3; 0:3; inf:3", "v"));
    CHECK(a.summary == "4xI3");

    CrossValidation b =
        cross_validate(hesse_model(), phi("u^2"), BranchProfile::parse("d=2; 0:2; inf:2", "t"));
    CHECK(b.symbolic.type_multiset() == b.combinatorial.type_multiset());

    // identity cover matches trivially
    CrossValidation c =
        cross_validate(xprime_model(), phi("u"), BranchProfile::parse("d=1", "v"));
    CHECK(c.symbolic.type_multiset() == c.combinatorial.type_multiset());

    // a wrong profile is rejected with MISMATCH
    CHECK_THROWS_AS(
        cross_validate(xprime_model(), phi("u^3"), BranchProfile::parse("d=3; 0:3; 1:3", "v")),
        calc_error);
}

TEST_CASE("branch quadratic of E_a") {
    BranchQuadratic b = branch_points_of_Ea();
    CHECK(b.root_sum() == parse_ratfunc("2a+2", "a"));
    CHECK(b.root_product() == parse_ratfunc("(a-1)^2", "a"));
    CHECK(b.discriminant() == parse_ratfunc("16a", "a"));

    // value at r=1 is a(a-4): tangency with the I3 place iff a = 4
    CHECK(b.eval_at(RatFuncQ(1)) == parse_ratfunc("a^2-4a", "a"));

    // a = 4: roots {1, 9}
    PolyQ q4 = b.specialize(Rational(4));
    CHECK(q4 == parse_poly("r^2-10r+9", "r"));
    auto roots = rational_roots(q4);
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 2);
    CHECK((*roots)[0].first + (*roots)[1].first == Rational(10));
    CHECK((*roots)[0].first * (*roots)[1].first == Rational(9));

    // a -> 0: double root at r = 1
    PolyQ q0 = b.specialize(Rational(0));
    CHECK(q0 == parse_poly("r^2-2r+1", "r"));
    CHECK(b.discriminant().eval(Rational(0)) == Rational(0));
}

TEST_CASE("profile parser round trip") {
    BranchProfile p = BranchProfile::parse("d=3; 0:3; inf:3; 9:2+1; 1:2+1", "v");
    CHECK(p.degree == 3);
    REQUIRE(p.entries.size() == 4);
    CHECK(p.entries[0].place.has_value());
    CHECK(p.entries[1].place->is_infinity());
    CHECK(p.str() == "d=3; 0:3; inf:3; 9:2+1; 1:2+1");

    BranchProfile gen = BranchProfile::parse("d=3; 0:3; inf:3; r1:2+1; r2:2+1", "v");
    CHECK(gen.entries[2].is_abstract());
}
