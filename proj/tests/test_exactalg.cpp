#include <doctest.h>

#include <random>

#include "eesurf/expr.hpp"
#include "eesurf/factor.hpp"
#include "eesurf/place.hpp"
#include "eesurf/poly.hpp"
#include "eesurf/ratfunc.hpp"
#include "eesurf/residue.hpp"

using namespace eesurf;

namespace {

PolyQ P(const std::string& s) { return parse_poly(s, "t"); }

PolyQ random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    int d = deg(rng);
    std::vector<Rational> cs(d + 1);
    for (auto& c : cs) c = Rational(num(rng)) / Rational(den(rng));
    return PolyQ("t", cs);
}

} // namespace

TEST_CASE("rational arithmetic and normalization") {
    Rational a(bigint(6), bigint(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((a + Rational(1, 2)).str() == "-1");
    CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
    CHECK(Rational::parse("-22/11").str() == "-2");
    CHECK(Rational(5, 3).mod2().str() == "5/3");
    CHECK(Rational(-1, 3).mod2().str() == "5/3");
    CHECK(Rational(7, 3).mod1().str() == "1/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), calc_error);
}

TEST_CASE("polynomial parse/print round trip") {
    CHECK(P("t^3 - 1").str() == "t^3 - 1");
    CHECK(P("3t + t^2").str() == "t^2 + 3*t");
    CHECK(P("(t-1)(t+2)^2").str() == "t^3 + 3*t^2 - 4");
    CHECK(parse_poly(P("2/3*t^2 - t + 5").str(), "t") == P("2/3*t^2 - t + 5"));

    auto z = parse_poly_param("(a^2-a)*z^2 + 3*a*z", "z", "a");
    CHECK(z.degree() == 2);
    CHECK(z[2] == parse_ratfunc("a^2-a", "a"));
    CHECK(z[1] == parse_ratfunc("3a", "a"));
    CHECK(parse_poly_param(z.str(), "z", "a") == z);
}

TEST_CASE("poly_gcd examples") {
    CHECK(gcd(P("t^3-1"), P("t^2-1")) == P("t-1"));
    CHECK(gcd(P("4t^2-4"), PolyQ("t")) == P("t^2-1")); // gcd(f, 0) = monic(f)
    CHECK(gcd(P("t^2+t+1"), P("t-1")) == P("1"));
    CHECK(gcd(PolyQ("t"), PolyQ("t")).is_zero_poly()); // gcd(0,0) = 0
}

TEST_CASE("gcd divides both inputs (randomized)") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        PolyQ f = random_poly(rng, 8), g = random_poly(rng, 8);
        if (f.is_zero_poly() || g.is_zero_poly()) continue;
        PolyQ d = gcd(f, g);
        CHECK(divmod(f, d).second.is_zero_poly());
        CHECK(divmod(g, d).second.is_zero_poly());
    }
}

TEST_CASE("ring axioms on randomized triples up to degree 20") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        PolyQ a = random_poly(rng, 20), b = random_poly(rng, 20), c = random_poly(rng, 20);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("factor_poly examples") {
    auto f1 = factor_poly(P("t^3-1"));
    REQUIRE(f1.fully_factored());
    REQUIRE(f1.irreducible.size() == 2);
    CHECK(f1.irreducible[0].poly == P("t-1"));
    CHECK(f1.irreducible[0].multiplicity == 1);
    CHECK(f1.irreducible[1].poly == P("t^2+t+1"));
    CHECK(f1.constant == Rational(1));

    auto f2 = factor_poly(P("(t-1)^2(t+2)"));
    REQUIRE(f2.fully_factored());
    REQUIRE(f2.irreducible.size() == 2);
    CHECK(f2.irreducible[0].poly == P("t+2")); // linear factors ordered by root
    CHECK(f2.irreducible[0].multiplicity == 1);
    CHECK(f2.irreducible[1].poly == P("t-1"));
    CHECK(f2.irreducible[1].multiplicity == 2);

    // the shape of the Hesse discriminant: 27 (t^3-1)^3
    auto f3 = factor_poly(Rational(27) * P("t^3-1").pow(3));
    REQUIRE(f3.fully_factored());
    CHECK(f3.constant == Rational(27));
    REQUIRE(f3.irreducible.size() == 2);
    CHECK(f3.irreducible[0].poly == P("t-1"));
    CHECK(f3.irreducible[0].multiplicity == 3);
    CHECK(f3.irreducible[1].poly == P("t^2+t+1"));
    CHECK(f3.irreducible[1].multiplicity == 3);
}

TEST_CASE("factor_poly cyclotomic and binomial patterns") {
    auto f = factor_poly(P("t^6-1"));
    REQUIRE(f.fully_factored());
    CHECK(f.irreducible.size() == 4); // t-1, t+1, t^2+t+1, t^2-t+1

    auto g = factor_poly(P("t^9-1"));
    REQUIRE(g.fully_factored());
    REQUIRE(g.irreducible.size() == 3);
    CHECK(g.irreducible[2].poly == P("t^6+t^3+1"));

    auto h = factor_poly(P("t^4-4"));
    REQUIRE(h.fully_factored());
    REQUIRE(h.irreducible.size() == 2); // t^2-2, t^2+2

    auto k = factor_poly(P("t^3+8"));
    REQUIRE(k.fully_factored());
    REQUIRE(k.irreducible.size() == 2);
    CHECK(k.irreducible[0].poly == P("t+2"));
    CHECK(k.irreducible[1].poly == P("t^2-2t+4"));
}

TEST_CASE("unfactored remainders are reported, not guessed") {
    auto f = factor_poly(P("t^4+t+1")); // irreducible quartic outside the strategy
    CHECK(!f.fully_factored());
    REQUIRE(f.unfactored.size() == 1);
    CHECK(f.unfactored[0].poly == P("t^4+t+1"));
    CHECK(irreducibility(P("t^4+t+1")) == Irreducibility::unknown);
}

TEST_CASE("factor product reconstructs the input (randomized)") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        // build a product of small linears and quadratics so the result factors fully
        PolyQ f = PolyQ::constant(Rational(1 + (int)(rng() % 7)));
        int parts = 1 + rng() % 4;
        for (int j = 0; j < parts; ++j) {
            long long r = (long long)(rng() % 9) - 4;
            f = f * (PolyQ::gen("t") - PolyQ::constant(Rational(r))).pow(1 + rng() % 2);
        }
        auto fac = factor_poly(f);
        REQUIRE(fac.fully_factored());
        CHECK(fac.reassemble("t") == f);
    }
}

TEST_CASE("irreducibility certificates") {
    CHECK(irreducibility(P("t^2+t+1")) == Irreducibility::irreducible);
    CHECK(irreducibility(P("t^2-t-1")) == Irreducibility::irreducible); // discriminant 5
    CHECK(irreducibility(P("t^2-t-2")) == Irreducibility::reducible);   // discriminant 9
    CHECK(irreducibility(P("t^2-4t+4")) == Irreducibility::reducible);
    CHECK(irreducibility(P("t^3-2")) == Irreducibility::irreducible);
    CHECK(irreducibility(P("t^6+t^3+1")) == Irreducibility::irreducible); // cyclotomic(9)
    CHECK(irreducibility(P("t^4+t^2+1")) == Irreducibility::reducible);
}

TEST_CASE("valuation examples") {
    RatFuncQ f(P("t^3-1").pow(2));
    CHECK(valuation(f, Place(P("t-1"))) == 2);
    CHECK(valuation(RatFuncQ(P("1"), P("t")), Place::infinity()) == 1);
    CHECK(valuation(RatFuncQ(P("3t")), Place(P("t^2+t+1"))) == 0);
    CHECK(valuation(RatFuncQ(P("0")), Place(P("t-1"))) == kValuationInfinity);
}

TEST_CASE("valuation is additive (randomized)") {
    std::mt19937_64 rng(4242);
    Place places[] = {Place(P("t-1")), Place(P("t")), Place(P("t^2+t+1")), Place::infinity()};
    for (int i = 0; i < 40; ++i) {
        PolyQ fn = random_poly(rng, 6), gn = random_poly(rng, 6);
        PolyQ fd = random_poly(rng, 4), gd = random_poly(rng, 4);
        if (fn.is_zero_poly() || gn.is_zero_poly() || fd.is_zero_poly() || gd.is_zero_poly())
            continue;
        RatFuncQ f(fn, fd), g(gn, gd);
        if (f.is_zero_fn() || g.is_zero_fn()) continue;
        for (const Place& p : places)
            CHECK(valuation(f * g, p) == valuation(f, p) + valuation(g, p));
    }
}

TEST_CASE("residue field arithmetic") {
    ResidueField F(P("t^2+t+1"));
    // the residue of t is a primitive cube root of unity: t * (-t-1) = 1
    CHECK(F.mul(P("t"), F.inverse(P("t"))) == P("1"));
    CHECK(F.inverse(P("t")) == P("-t-1"));
    // every nonzero element of small height is invertible
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            PolyQ e = PolyQ("t", {Rational(a), Rational(b)});
            if (F.is_zero_elem(e)) continue;
            CHECK(F.mul(e, F.inverse(e)) == P("1"));
        }
    CHECK_THROWS_AS(F.inverse(P("0")), calc_error);
}

TEST_CASE("place validation") {
    CHECK_THROWS_AS(Place(P("t^2-1")), calc_error);        // reducible
    CHECK_THROWS_AS(Place(P("t^4+t+1")), calc_error);      // uncertifiable -> unfactored
    CHECK(Place(P("2t-2")) == Place(P("t-1")));            // places are monic
    CHECK(Place::infinity().degree() == 1);
    CHECK(Place(P("t^2+t+1")).degree() == 2);
}

TEST_CASE("rational function reduction invariants") {
    RatFuncQ f(P("t^3-1"), P("t^2-1"));
    CHECK(f.num() == P("t^2+t+1"));
    CHECK(f.den() == P("t+1"));
    RatFuncQ g(P("2t+2"), P("4t-4"));
    CHECK(g.den() == P("t-1")); // monic denominator
    CHECK(g.num() == P("1/2*t+1/2"));
}
