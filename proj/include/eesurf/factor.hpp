#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eesurf/poly.hpp"

namespace eesurf {

struct FactorUnit {
    PolyQ poly; // monic
    int multiplicity = 1;
};

// Result of factoring over Q. `irreducible` entries are certified; anything
// the strategy cannot certify lands in `unfactored` and is never silently
// promoted to irreducible.
struct Factorization {
    Rational constant = Rational(1);
    std::vector<FactorUnit> irreducible;
    std::vector<FactorUnit> unfactored;

    bool fully_factored() const { return unfactored.empty(); }
    PolyQ reassemble(const std::string& var) const;
};

// Factoring strategy: squarefree decomposition, then per squarefree part:
// binomial patterns x^k -> cyclotomic products / square splits, rational-root
// extraction, and degree <= 3 certification. Everything else is reported as
// unfactored.
Factorization factor_poly(const PolyQ& f);

enum class Irreducibility { irreducible, reducible, unknown };
Irreducibility irreducibility(const PolyQ& f);

// All rational roots of f with multiplicities, provided the search is
// complete; nullopt when the coefficient divisors could not be enumerated.
std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const PolyQ& f);

// The d-th cyclotomic polynomial in the given variable.
PolyQ cyclotomic(int d, const std::string& var);

// Yun's squarefree decomposition: f = c * prod out[i].poly^(out[i].multiplicity)
// with the parts squarefree and pairwise coprime.
Factorization squarefree_decomposition(const PolyQ& f);

// Exact square root over Q if it exists.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace eesurf
