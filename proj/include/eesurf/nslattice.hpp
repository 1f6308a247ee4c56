#pragma once

#include <string>
#include <vector>

#include "eesurf/kodaira.hpp"
#include "eesurf/rational.hpp"

namespace eesurf {

// Building blocks of trivial Neron-Severi lattices: negative-definite root
// blocks A_n and E6 plus the hyperbolic plane U.
enum class RootBlockKind { A, E6, U };

struct RootBlock {
    RootBlockKind kind = RootBlockKind::U;
    int n = 0; // index for A_n

    static RootBlock An(int n) {
        if (n < 1) fail(errc::internal, "A_n needs n >= 1");
        return {RootBlockKind::A, n};
    }
    static RootBlock E6() { return {RootBlockKind::E6, 0}; }
    static RootBlock U() { return {RootBlockKind::U, 0}; }

    int rank() const { return kind == RootBlockKind::A ? n : (kind == RootBlockKind::E6 ? 6 : 2); }
    long long disc() const {
        return kind == RootBlockKind::A ? n + 1 : (kind == RootBlockKind::E6 ? 3 : 1);
    }
    // q-value of a generator of the (cyclic) discriminant group, mod 2Z.
    // Sign convention: minus throughout (negative-definite blocks).
    Rational gen_q() const;
    std::string str() const;
};

// Root block contributed by a singular fiber: In -> A_{n-1}, IV -> A2,
// IV* -> E6, III -> A1. I0, I1 and II contribute nothing.
std::vector<RootBlock> fiber_root_blocks(const KodairaType& t);
// All blocks of a configuration, with geometric multiplicity expanded.
std::vector<RootBlock> config_root_blocks(const FiberConfig& config);

// Finite quadratic form: orthogonal sum of cyclic groups Z/k_i with
// Q/2Z-valued q on the generators; the pairing b is derived from q.
struct FiniteQuadForm {
    struct Gen {
        long long order = 1;
        Rational q; // mod 2Z
    };
    std::vector<Gen> gens;

    static FiniteQuadForm from_blocks(const std::vector<RootBlock>& blocks);

    long long group_order() const;
    Rational q_of(const std::vector<long long>& x) const;                       // mod 2Z
    Rational b(const std::vector<long long>& x, const std::vector<long long>& y) const; // mod Z
    std::string str() const;
};

// An isotropic order-ell subgroup K = <gen> together with the invariant
// factors of K^perp / K (ascending divisibility chain, 1s dropped).
struct IsotropicQuotient {
    std::vector<long long> gen;
    std::vector<long long> invariants;
    long long quotient_order = 1;

    std::string group_str() const; // "Z3 + Z6"
};

// Enumerates all isotropic subgroups of prime order ell and computes the
// quotient structure K^perp/K by integer lattice arithmetic (Hermite and
// Smith normal forms).
std::vector<IsotropicQuotient> isotropic_quotients(const FiniteQuadForm& f, long long ell);

// Shioda-Tate: rho = 2 + rank(MW) + sum over fibers of (components - 1).
// EXCEEDS_H11 when the result is larger than h^{1,1} of the surface.
int shioda_tate_rho(const FiberConfig& config, int mw_rank);

// Discriminant of the Neron-Severi lattice: product of the block
// discriminants (fiber blocks of the configuration plus any extra blocks,
// e.g. A1 for a rank-one Mordell-Weil lattice) divided by torsion^2.
// NONINTEGRAL when the division fails.
Rational ns_discriminant(const FiberConfig& config, long long torsion_order,
                         const std::vector<RootBlock>& extra_blocks = {});

// Height of a section: 2 chi + 2 (P.O) - sum of fiber contributions.
Rational mw_height(int chi, int p_dot_o,
                   const std::vector<std::pair<KodairaType, int>>& contribs);

// Box-bounded check that no section class equation
//   2 n^2 (h+1) - 2 = R.R + 2 n (Sigma0 . R)
// is solvable with R an integer combination of the A2^4 + A1 root basis in
// the coefficient box, Sigma0 meeting at most one non-identity component per
// fiber, and R tied to the incidence pattern by the group-law class
// equation (R . alpha = -n Sigma0 . alpha for every root alpha).
struct PrimitivitySearch {
    int n_max = 0, h_max = 0, coeff_bound = 0;
    // conceptual box size (2b+1)^9 and the number actually screened after
    // blockwise factorization
    double box_size = 0;
    long long screened = 0;
    struct Solution {
        int n = 0, h = 0;
        long long sigma = 0;
        std::vector<long long> coeffs;
    };
    std::vector<Solution> solutions;
    std::string mod3_note;

    std::string to_json() const;
};

PrimitivitySearch primitivity_search(int n_max, int h_max, int coeff_bound);

} // namespace eesurf
