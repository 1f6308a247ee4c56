#pragma once

#include <string>
#include <vector>

#include "eesurf/kodaira.hpp"
#include "eesurf/weierstrass.hpp"

namespace eesurf {

// One branch point of a cover of the projective line: the base place (or an
// abstract label for a point in general position) together with the
// partition of the covering degree by local ramification indices.
struct ProfileEntry {
    std::optional<Place> place; // nullopt for a point in general position
    std::string label;
    std::vector<int> partition;

    bool is_abstract() const { return !place.has_value(); }
};

struct BranchProfile {
    int degree = 1;
    std::vector<ProfileEntry> entries;

    // Compact syntax: "d=3; 0:3; inf:3; 9:2+1; r1:2+1". Place tokens are
    // rational numbers, "inf", or identifiers for points in general position.
    static BranchProfile parse(const std::string& text, const std::string& var);
    std::string str() const;

    void validate() const; // partitions sum to the degree
};

// Riemann-Hurwitz: 2g - 2 = d(2g_base - 2) + sum (e_i - 1).
// NONINTEGRAL when the parity fails or the genus would be negative.
int rh_genus(const BranchProfile& profile, int g_base);

// Local fiber-type transition under a degree-e ramified point. Implemented
// exactly for the pairs exercised here: In for all e, IV* for e in {1,2,3},
// smooth fibers, and the trivial e = 1 copy. Everything else errors.
KodairaType transition(const KodairaType& type, int e);

// Symbolic base change: substitute the fibration variable by phi(u) and
// clear denominators with the weight-i rescaling dictated by the degree
// bound. The result is classified by tate_local/full_config as usual.
WeierstrassModel pullback_model(const WeierstrassModel& m, const RatFuncQ& phi);

// Combinatorial base change: transport a fiber configuration through a
// branch profile using the transition table; unramified places are copied
// degree-many times. The output genus comes from Riemann-Hurwitz.
FiberConfig transported_config(const FiberConfig& config, const BranchProfile& profile);

// Ramification profile of a non-constant rational map phi: computed from the
// pullback divisors of its branch places (only places with nontrivial
// partitions are listed).
BranchProfile ramification_profile(const RatFuncQ& phi);

struct CrossValidation {
    FiberConfig symbolic;
    FiberConfig combinatorial;
    std::string summary;
};

// Runs both base-change modes and insists the fiber-type multisets agree;
// throws MISMATCH with a diff otherwise. The profile must consist of
// concrete places and match phi's computed ramification.
CrossValidation cross_validate(const WeierstrassModel& m, const RatFuncQ& phi,
                               const BranchProfile& profile);

// The monic quadratic in r over Q(a) whose roots are the two simple branch
// points (1 +- sqrt(a))^2 of E_a -> P1: r^2 - (2a+2) r + (a-1)^2. Root data
// is exposed through symmetric functions; no square root is ever taken.
struct BranchQuadratic {
    Poly<RatFuncQ> quadratic; // monic in r

    RatFuncQ root_sum() const { return -quadratic[1]; }
    RatFuncQ root_product() const { return quadratic[0]; }
    RatFuncQ discriminant() const { return root_sum() * root_sum() - RatFuncQ(4) * root_product(); }
    RatFuncQ eval_at(const RatFuncQ& r) const;
    PolyQ specialize(const Rational& a) const;
};

BranchQuadratic branch_points_of_Ea();

// Branch profiles of the named covers (over the X' coordinate v).
BranchProfile profile_Ya_generic(); // totally branched at 0, inf; simple at two general points
BranchProfile profile_Y4();         // simple branch points at 1 and 9
BranchProfile profile_Y0();         // Galois, totally branched at 0, 1, inf
BranchProfile profile_Zprime();     // totally branched at inf, simple at 0 and 4

} // namespace eesurf
