#pragma once

#include <utility>

#include "eesurf/poly.hpp"

namespace eesurf {

// The residue field Q[t]/(p) at a monic irreducible p. Elements are
// polynomials of degree < deg p; arithmetic reduces modulo p and nonzero
// elements are invertible via the extended Euclidean algorithm.
class ResidueField {
public:
    explicit ResidueField(PolyQ modulus) : modulus_(modulus.monic()) {
        if (modulus_.degree() < 1) fail(errc::internal, "residue field modulus must be nonconstant");
    }

    const PolyQ& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    PolyQ reduce(const PolyQ& a) const { return a % modulus_; }
    PolyQ add(const PolyQ& a, const PolyQ& b) const { return reduce(a + b); }
    PolyQ sub(const PolyQ& a, const PolyQ& b) const { return reduce(a - b); }
    PolyQ mul(const PolyQ& a, const PolyQ& b) const { return reduce(a * b); }

    PolyQ inverse(const PolyQ& a) const {
        PolyQ r = reduce(a);
        if (r.is_zero_poly()) fail(errc::internal, "inverse of zero residue");
        // extended Euclid: find u with u*r = 1 (mod modulus)
        PolyQ r0 = modulus_, r1 = r;
        PolyQ s0(modulus_.var()), s1 = PolyQ::constant(Rational(1));
        while (!r1.is_zero_poly()) {
            auto [q, rem] = divmod(r0, r1);
            PolyQ s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd, a unit constant since the modulus is irreducible
        if (r0.degree() != 0)
            fail(errc::internal, "modulus is reducible: gcd has positive degree");
        return reduce(Rational(1) / r0[0] * s0);
    }

    PolyQ div(const PolyQ& a, const PolyQ& b) const { return mul(a, inverse(b)); }

    bool is_zero_elem(const PolyQ& a) const { return reduce(a).is_zero_poly(); }

private:
    PolyQ modulus_;
};

} // namespace eesurf
