#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "eesurf/factor.hpp"
#include "eesurf/poly.hpp"
#include "eesurf/ratfunc.hpp"
#include "eesurf/residue.hpp"

namespace eesurf {

// A place of the rational function field Q(t): either a monic irreducible
// polynomial p(t) or the point at infinity. Degree-one places are rational
// points; higher-degree places carry a nontrivial residue field (the place
// t^2+t+1, for instance, houses both primitive cube roots of unity).
class Place {
public:
    static Place infinity() { return Place(infinity_tag{}); }

    static Place at(Rational point, const std::string& var) {
        return Place(PolyQ::gen(var) - PolyQ::constant(std::move(point)));
    }

    // Validates irreducibility through the factorization routine; refuses
    // anything it cannot certify.
    explicit Place(PolyQ p) : poly_(std::in_place, p.monic()) {
        switch (irreducibility(*poly_)) {
        case Irreducibility::irreducible: break;
        case Irreducibility::reducible: fail(errc::internal, "place polynomial is reducible: " + p.str());
        case Irreducibility::unknown:
            fail(errc::unfactored, "cannot certify irreducibility of place " + p.str());
        }
    }

    bool is_infinity() const { return !poly_.has_value(); }
    const PolyQ& poly() const {
        if (is_infinity()) fail(errc::internal, "finite part of the infinite place");
        return *poly_;
    }
    int degree() const { return is_infinity() ? 1 : poly_->degree(); }

    ResidueField residue_field() const {
        if (is_infinity()) fail(errc::internal, "residue field at infinity: use the chart swap");
        return ResidueField(*poly_);
    }

    std::string str() const { return is_infinity() ? "inf" : poly_->str(); }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return *a.poly_ == *b.poly_;
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
        if (a.is_infinity()) return false;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.str() < b.str();
    }

private:
    struct infinity_tag {};
    explicit Place(infinity_tag) {}

    std::optional<PolyQ> poly_;
};

// Sentinel for the valuation of the zero function.
inline constexpr int kValuationInfinity = std::numeric_limits<int>::max();

// Order of vanishing of f at P; at infinity this is deg den - deg num.
inline int valuation(const RatFuncQ& f, const Place& P) {
    if (f.is_zero_fn()) return kValuationInfinity;
    if (P.is_infinity()) return -f.degree_difference();
    const PolyQ& p = P.poly();
    return f.num().multiplicity_of(p) - f.den().multiplicity_of(p);
}

inline int valuation(const PolyQ& f, const Place& P) { return valuation(RatFuncQ(f), P); }

} // namespace eesurf
