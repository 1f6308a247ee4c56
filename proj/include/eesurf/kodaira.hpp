#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eesurf/place.hpp"
#include "eesurf/weierstrass.hpp"

namespace eesurf {

// Kodaira types of degenerate elliptic fibers. I0 is the smooth fiber,
// carried as In with n = 0.
enum class FiberClass { In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaType {
    FiberClass cls = FiberClass::In;
    int n = 0; // index for In (n >= 0) and In* (n >= 1)

    static KodairaType I(int n) { return {FiberClass::In, n}; }
    static KodairaType Istar(int n) { return {FiberClass::Instar, n}; }
    static KodairaType make(FiberClass c) { return {c, 0}; }
    static KodairaType parse(const std::string& s);

    bool is_smooth() const { return cls == FiberClass::In && n == 0; }
    bool is_multiplicative() const { return cls == FiberClass::In && n >= 1; }
    bool is_additive() const { return !(cls == FiberClass::In); }

    int euler() const;
    int components() const;

    // Standard monodromy representative in SL2(Z).
    std::array<std::array<long long, 2>, 2> monodromy() const;
    // Multiplicative order of the monodromy; nullopt encodes infinite order.
    std::optional<int> monodromy_order() const;

    // Height-pairing correction contr(i, j) for sections passing through
    // components i and j of this fiber. Component 0 is the identity
    // component. For In the components are numbered cyclically; for IV, IV*
    // and I0* the indices 1.. label the simple non-identity components; for
    // In* index 1 is the near component and 2, 3 the far ones.
    Rational contr(int i, int j) const;
    Rational contr(int i) const { return contr(i, i); }

    std::string str() const;

    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        return a.cls == b.cls && a.n == b.n;
    }
    friend bool operator<(const KodairaType& a, const KodairaType& b);
};

// One singular fiber of a configuration. Fibers computed from a Weierstrass
// model carry their place; combinatorially transported fibers carry a label
// only. The geometric multiplicity counts conjugate fibers (the degree of
// the place).
struct FiberEntry {
    std::optional<Place> place;
    std::string label;
    KodairaType type;
    int mult = 1;
};

struct FiberConfig {
    std::vector<FiberEntry> entries;
    int genus = 0;

    int total_euler() const;
    int fiber_count() const; // geometric count of singular fibers
    // "2I3 + I6"-style summary, entries ordered by ascending Euler number.
    std::string summary() const;
    std::string to_json() const;

    // Multiset of (type, geometric count), for cross-validation.
    std::vector<std::pair<KodairaType, int>> type_multiset() const;
};

// Result of running Tate's algorithm at one place.
struct LocalFiber {
    KodairaType type;
    WeierstrassModel minimal_model;
    int v_delta_min = 0;
    int rescale_steps = 0; // number of x -> pi^2 x, y -> pi^3 y rescalings applied
};

// Tate's algorithm over the local ring at P (residue characteristic zero):
// minimalize by rescaling whenever v(c4) >= 4 and v(disc) >= 12, then read
// the type from the valuations of c4, c6 and the minimal discriminant. At
// infinity the computation runs on chart_at_infinity(m).
LocalFiber tate_local(const WeierstrassModel& m, const Place& p);

// All singular fibers of the relatively minimal model: factor the
// discriminant, classify every place of positive minimal valuation, and
// include the place at infinity.
FiberConfig full_config(const WeierstrassModel& m);

struct SurfaceInvariants {
    int chi = 0;
    int deg_l = 0;
    int p_g = 0;
    int q = 0;
    int h11 = 0;
    std::string classification;
};

// Numerology of the elliptic surface carrying the configuration:
// deg L = chi/12, q = g, p_g = deg L + g - 1, h11 = 10 deg L + 2g.
SurfaceInvariants surface_invariants(const FiberConfig& config);

// Dimension 10d + 2g - 2 of the moduli space of elliptic surfaces over a
// genus-g base with fundamental line bundle degree d.
int moduli_dimension(int d, int g);

} // namespace eesurf
