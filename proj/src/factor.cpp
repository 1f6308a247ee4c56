#include "eesurf/factor.hpp"

#include <algorithm>
#include <map>

namespace eesurf {

namespace {

// Trial-division factorization of |n| up to the bound. Returns prime powers
// and sets `complete` when the cofactor was fully split.
std::vector<std::pair<bigint, int>> trial_factor(bigint n, bool& complete) {
    std::vector<std::pair<bigint, int>> out;
    complete = true;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    const long long bound = 1 << 20;
    for (long long p = 2; p <= bound && bigint(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n <= bigint(bound) * bound) {
            out.emplace_back(n, 1); // cofactor below bound^2 with no factor <= bound is prime
        } else {
            complete = false;
            out.emplace_back(n, 1);
        }
    }
    return out;
}

// All positive divisors of n; nullopt when the factorization was incomplete.
std::optional<std::vector<bigint>> divisors(const bigint& n) {
    bool complete = true;
    auto pf = trial_factor(n, complete);
    if (!complete) return std::nullopt;
    std::vector<bigint> out{1};
    for (auto& [p, e] : pf) {
        size_t sz = out.size();
        bigint pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Clear denominators: c * f with integer coefficients, content removed.
PolyQ integer_primitive(const PolyQ& f) {
    bigint l = 1;
    for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, c.den());
    bigint g = 0;
    for (const auto& c : f.coeffs()) g = boost::multiprecision::gcd(g, c.num() * (l / c.den()));
    if (g == 0) g = 1;
    std::vector<Rational> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(c * Rational(l, g));
    return PolyQ(f.var(), std::move(cs));
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

} // namespace

PolyQ Factorization::reassemble(const std::string& var) const {
    PolyQ out = PolyQ::constant(constant);
    for (const auto& u : irreducible) out = out * u.poly.pow(u.multiplicity);
    for (const auto& u : unfactored) out = out * u.poly.pow(u.multiplicity);
    if (out.var().empty()) return PolyQ(var, out.coeffs());
    return out;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    bigint sn = boost::multiprecision::sqrt(r.num());
    bigint sd = boost::multiprecision::sqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
    return Rational(sn, sd);
}

PolyQ cyclotomic(int d, const std::string& var) {
    static std::map<int, PolyQ> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return PolyQ(var, it->second.coeffs());
    PolyQ x = PolyQ::gen(var);
    PolyQ result = x - PolyQ::constant(Rational(1));
    if (d > 1) {
        PolyQ xn_minus_1 = x.pow(d) - PolyQ::constant(Rational(1));
        PolyQ denom = PolyQ::constant(Rational(1));
        for (int e = 1; e < d; ++e)
            if (d % e == 0) denom = denom * cyclotomic(e, var);
        result = xn_minus_1 / denom;
    }
    cache.emplace(d, result);
    return result;
}

Factorization squarefree_decomposition(const PolyQ& f) {
    Factorization out;
    if (f.is_zero_poly()) fail(errc::internal, "squarefree decomposition of zero");
    out.constant = f.lead();
    PolyQ g = f.monic();
    if (g.degree() == 0) return out;
    // Yun's algorithm (characteristic zero)
    PolyQ d = g.derivative();
    PolyQ a = gcd(g, d);
    PolyQ b = g / a;
    PolyQ c = d / a - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        PolyQ ai = gcd(b, c);
        if (ai.degree() > 0) out.irreducible.push_back({ai, i});
        b = b / ai;
        c = c / ai - b.derivative();
        ++i;
    }
    return out;
}

std::optional<std::vector<std::pair<Rational, int>>> rational_roots(const PolyQ& f) {
    if (f.is_zero_poly()) fail(errc::internal, "roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    PolyQ g = f;
    // factor out x^v
    int v = 0;
    while (g.degree() > 0 && is_zero(g[0])) {
        g = divmod(g, PolyQ::gen(f.var())).first;
        ++v;
    }
    if (v > 0) roots.emplace_back(Rational(0), v);
    if (g.degree() == 0) return roots;

    PolyQ zi = integer_primitive(g);
    auto ds0 = divisors(zi[0].num());
    auto dsl = divisors(zi.lead().num());
    if (!ds0 || !dsl) return std::nullopt;
    for (const bigint& p : *ds0) {
        for (const bigint& q : *dsl) {
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (!is_zero(g.eval(cand))) continue;
                bool known = false;
                for (auto& [r, m] : roots) known = known || r == cand;
                if (known) continue;
                PolyQ lin = PolyQ::gen(f.var()) - PolyQ::constant(cand);
                int m = g.multiplicity_of(lin);
                if (m > 0) roots.emplace_back(cand, m);
            }
        }
    }
    return roots;
}

namespace {

// Factors a monic squarefree polynomial; pushes certified irreducible factors
// and uncertifiable remainders onto the output lists.
void factor_squarefree(const PolyQ& input, int mult, Factorization& out) {
    std::vector<PolyQ> queue{input};
    while (!queue.empty()) {
        PolyQ p = queue.back();
        queue.pop_back();
        if (p.degree() <= 0) continue;
        if (p.degree() == 1) {
            out.irreducible.push_back({p, mult});
            continue;
        }

        // binomial patterns x^k + c
        if (p.num_terms() == 2 && !is_zero(p[0])) {
            int k = p.degree();
            Rational c = p[0];
            if (c == Rational(-1)) { // x^k - 1: product of cyclotomics
                for (int d = 1; d <= k; ++d)
                    if (k % d == 0) out.irreducible.push_back({cyclotomic(d, p.var()), mult});
                continue;
            }
            if (c == Rational(1)) { // x^k + 1 = (x^{2k}-1)/(x^k-1)
                for (int d = 1; d <= 2 * k; ++d)
                    if ((2 * k) % d == 0 && k % d != 0)
                        out.irreducible.push_back({cyclotomic(d, p.var()), mult});
                continue;
            }
            if (k % 2 == 0) { // difference of squares
                if (auto s = rational_sqrt(-c)) {
                    PolyQ half = PolyQ::gen(p.var()).pow(k / 2);
                    queue.push_back(half - PolyQ::constant(*s));
                    queue.push_back(half + PolyQ::constant(*s));
                    continue;
                }
            }
        }

        // biquadratic x^4 + p x^2 + q: reducible over Q iff z^2 - p z + q has a
        // rational root (then f = (x^2 - z1)(x^2 - z2)) or q = b^2 with
        // 2b - p = a^2 (then f = (x^2 + a x + b)(x^2 - a x + b)); otherwise
        // certified irreducible.
        if (p.degree() == 4 && is_zero(p[1]) && is_zero(p[3])) {
            Rational pc = p[2], qc = p[0];
            PolyQ x2 = PolyQ::gen(p.var()).pow(2);
            if (auto s = rational_sqrt(pc * pc - Rational(4) * qc)) {
                Rational z1 = (pc + *s) / Rational(2), z2 = (pc - *s) / Rational(2);
                queue.push_back(x2 + PolyQ::constant(z1));
                queue.push_back(x2 + PolyQ::constant(z2));
                continue;
            }
            bool split = false;
            if (auto broot = rational_sqrt(qc)) {
                for (Rational b : {*broot, -*broot}) {
                    if (auto a = rational_sqrt(Rational(2) * b - pc)) {
                        PolyQ ax = PolyQ::constant(*a) * PolyQ::gen(p.var());
                        queue.push_back(x2 + ax + PolyQ::constant(b));
                        queue.push_back(x2 - ax + PolyQ::constant(b));
                        split = true;
                        break;
                    }
                }
            }
            if (split) continue;
            out.irreducible.push_back({p, mult});
            continue;
        }

        // trinomial cyclotomic patterns x^2m +- x^m + 1
        if (p.num_terms() == 3 && p.degree() % 2 == 0) {
            int m = p.degree() / 2;
            bool plus = p[0] == Rational(1) && p[m] == Rational(1);
            bool minus = p[0] == Rational(1) && p[m] == Rational(-1);
            if (plus) { // (x^3m - 1)/(x^m - 1)
                for (int d = 1; d <= 3 * m; ++d)
                    if ((3 * m) % d == 0 && m % d != 0)
                        out.irreducible.push_back({cyclotomic(d, p.var()), mult});
                continue;
            }
            if (minus) { // (x^3m + 1)/(x^m + 1)
                for (int d = 1; d <= 6 * m; ++d)
                    if ((6 * m) % d == 0 && (3 * m) % d != 0 && (2 * m) % d != 0)
                        out.irreducible.push_back({cyclotomic(d, p.var()), mult});
                continue;
            }
        }

        auto roots = rational_roots(p);
        if (roots && !roots->empty()) {
            PolyQ rest = p;
            for (auto& [r, m] : *roots) {
                PolyQ lin = PolyQ::gen(p.var()) - PolyQ::constant(r);
                out.irreducible.push_back({lin, mult * m});
                for (int i = 0; i < m; ++i) rest = rest / lin;
            }
            if (rest.degree() > 0) queue.push_back(rest);
            continue;
        }

        if (roots && p.degree() <= 3) {
            // no rational root certifies irreducibility in degrees 2 and 3
            out.irreducible.push_back({p, mult});
            continue;
        }

        out.unfactored.push_back({p, mult});
    }
}

} // namespace

Factorization factor_poly(const PolyQ& f) {
    if (f.is_zero_poly()) fail(errc::internal, "factorization of zero");
    Factorization sf = squarefree_decomposition(f);
    Factorization out;
    out.constant = sf.constant;
    for (const auto& part : sf.irreducible) factor_squarefree(part.poly, part.multiplicity, out);
    auto less = [](const FactorUnit& a, const FactorUnit& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        if (a.poly.degree() == 1) return -a.poly[0] < -b.poly[0]; // by root location
        for (int i = 0; i <= a.poly.degree(); ++i)
            if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
        return false;
    };
    std::sort(out.irreducible.begin(), out.irreducible.end(), less);
    return out;
}

Irreducibility irreducibility(const PolyQ& f) {
    if (f.degree() <= 0) return Irreducibility::reducible; // units are not irreducible
    if (f.degree() == 1) return Irreducibility::irreducible;

    if (f.degree() == 2) { // irreducible iff the discriminant is not a square
        Rational a = f[2], b = f[1], c = f[0];
        return rational_sqrt(b * b - Rational(4) * a * c) ? Irreducibility::reducible
                                                          : Irreducibility::irreducible;
    }

    // cyclotomic recognition at any degree: phi(d) = n forces d <= 6n^2
    int n = f.degree();
    PolyQ monic_f = f.monic();
    for (int d = 1; d <= 6 * n * n; ++d) {
        if (euler_phi(d) != n) continue;
        if (monic_f == cyclotomic(d, f.var())) return Irreducibility::irreducible;
    }

    auto roots = rational_roots(monic_f);
    if (!roots) return Irreducibility::unknown;
    if (!roots->empty()) return Irreducibility::reducible;
    if (n == 3) return Irreducibility::irreducible;

    Factorization fac = factor_poly(monic_f);
    if (fac.fully_factored()) {
        if (fac.irreducible.size() == 1 && fac.irreducible[0].multiplicity == 1)
            return Irreducibility::irreducible;
        return Irreducibility::reducible;
    }
    if (fac.irreducible.empty() && fac.unfactored.size() == 1) return Irreducibility::unknown;
    return Irreducibility::reducible; // a proper certified factor exists
}

} // namespace eesurf
