#include "eesurf/basechange.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eesurf/expr.hpp"
#include "eesurf/factor.hpp"

namespace eesurf {

void BranchProfile::validate() const {
    if (degree < 1) fail(errc::internal, "cover degree must be positive");
    for (const auto& e : entries) {
        int sum = 0;
        for (int part : e.partition) {
            if (part < 1) fail(errc::internal, "ramification indices must be positive");
            sum += part;
        }
        if (sum != degree)
            fail(errc::internal, "partition at " + e.label + " sums to " + std::to_string(sum) +
                                     ", expected " + std::to_string(degree));
        if (e.place && !e.place->is_infinity() && e.place->degree() != 1)
            fail(errc::unsupported, "branch places of degree > 1 are not supported");
    }
}

BranchProfile BranchProfile::parse(const std::string& text, const std::string& var) {
    BranchProfile p;
    std::istringstream is(text);
    std::string piece;
    bool saw_degree = false;
    while (std::getline(is, piece, ';')) {
        auto strip = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        piece = strip(piece);
        if (piece.empty()) continue;
        if (piece.rfind("d=", 0) == 0) {
            p.degree = std::stoi(piece.substr(2));
            saw_degree = true;
            continue;
        }
        auto colon = piece.find(':');
        if (colon == std::string::npos) fail(errc::internal, "malformed profile entry: " + piece);
        std::string where = strip(piece.substr(0, colon));
        std::string parts = piece.substr(colon + 1);

        ProfileEntry entry;
        entry.label = where;
        if (where == "inf") {
            entry.place = Place::infinity();
        } else {
            bool numeric = where.find_first_not_of("0123456789/-") == std::string::npos;
            if (numeric) {
                entry.place = Place::at(Rational::parse(where), var);
            } // otherwise: abstract point in general position
        }
        std::istringstream ps(parts);
        std::string tok;
        while (std::getline(ps, tok, '+')) entry.partition.push_back(std::stoi(strip(tok)));
        std::sort(entry.partition.rbegin(), entry.partition.rend());
        p.entries.push_back(std::move(entry));
    }
    if (!saw_degree) fail(errc::internal, "profile is missing d=<degree>");
    p.validate();
    return p;
}

std::string BranchProfile::str() const {
    std::string out = "d=" + std::to_string(degree);
    for (const auto& e : entries) {
        out += "; " + e.label + ":";
        for (size_t i = 0; i < e.partition.size(); ++i)
            out += (i ? "+" : "") + std::to_string(e.partition[i]);
    }
    return out;
}

int rh_genus(const BranchProfile& profile, int g_base) {
    profile.validate();
    int ram = 0;
    for (const auto& e : profile.entries)
        for (int part : e.partition) ram += part - 1;
    int rhs = profile.degree * (2 * g_base - 2) + ram;
    if (rhs % 2 != 0)
        fail(errc::nonintegral, "Riemann-Hurwitz total 2g-2 = " + std::to_string(rhs) + " is odd");
    int g = rhs / 2 + 1;
    if (g < 0) fail(errc::nonintegral, "Riemann-Hurwitz genus is negative");
    return g;
}

KodairaType transition(const KodairaType& type, int e) {
    if (e < 1) fail(errc::internal, "ramification index must be positive");
    if (e == 1) return type;
    if (type.cls == FiberClass::In) return KodairaType::I(type.n * e); // includes smooth fibers
    if (type.cls == FiberClass::IVstar) {
        if (e == 2) return KodairaType::make(FiberClass::IV);
        if (e == 3) return KodairaType::I(0);
    }
    fail(errc::unsupported,
         "fiber transition (" + type.str() + ", e=" + std::to_string(e) + ") is outside the implemented table");
}

WeierstrassModel pullback_model(const WeierstrassModel& m, const RatFuncQ& phi) {
    if (phi.is_constant()) fail(errc::internal, "base change by a constant map");
    int d = m.degree_bound();
    RatFuncQ lambda(phi.den()); // q(u)^d clears a_i(p/q) for deg a_i <= i*d
    auto embed = [](const Rational& c) { return RatFuncQ(c); };
    auto pull = [&](const RatFuncQ& a, int i, const char* which) {
        if (!a.is_polynomial())
            fail(errc::degree_violation, std::string(which) + " is not polynomial");
        if (a.num().degree() > i * d)
            fail(errc::degree_violation, std::string(which) + " exceeds the degree bound");
        RatFuncQ composed = a.num().eval_gen(phi, embed);
        RatFuncQ scaled = lambda.pow(i * d) * composed;
        if (!scaled.is_polynomial())
            fail(errc::internal, std::string(which) + " did not clear to a polynomial");
        return scaled;
    };
    int dprime = d * phi.map_degree();
    return WeierstrassModel(phi.var(), pull(m.a1(), 1, "a1"), pull(m.a2(), 2, "a2"),
                            pull(m.a3(), 3, "a3"), pull(m.a4(), 4, "a4"), pull(m.a6(), 6, "a6"),
                            dprime);
}

namespace {

// Canonical key independent of the variable name, so profiles written in the
// cover coordinate match configurations over the base coordinate.
std::string place_key(const Place& p) {
    if (p.is_infinity()) return "inf";
    std::string key = "deg" + std::to_string(p.degree()) + ":";
    for (int i = 0; i <= p.poly().degree(); ++i) key += p.poly()[i].str() + ",";
    return key;
}

} // namespace

FiberConfig transported_config(const FiberConfig& config, const BranchProfile& profile) {
    profile.validate();
    FiberConfig out;
    out.genus = rh_genus(profile, config.genus);

    std::map<std::string, const FiberEntry*> by_place;
    for (const auto& f : config.entries) {
        if (!f.place) fail(errc::unsupported, "transport requires a concrete base configuration");
        by_place[place_key(*f.place)] = &f;
    }

    std::map<std::string, bool> covered;
    for (const auto& e : profile.entries) {
        KodairaType base_type = KodairaType::I(0);
        int base_mult = 1;
        if (e.place) {
            auto it = by_place.find(place_key(*e.place));
            if (it != by_place.end()) {
                base_type = it->second->type;
                base_mult = it->second->mult;
                covered[it->first] = true;
                if (base_mult != 1)
                    fail(errc::unsupported, "branching over a non-rational place is not supported");
            }
        }
        int idx = 0;
        for (int part : e.partition) {
            KodairaType t = transition(base_type, part);
            ++idx;
            if (t.is_smooth()) continue;
            std::string label = "over " + e.label + " (e=" + std::to_string(part) + ")";
            if (e.partition.size() > 1) label += " #" + std::to_string(idx);
            out.entries.push_back({std::nullopt, label, t, 1});
        }
    }
    for (const auto& f : config.entries) {
        if (covered.count(place_key(*f.place))) continue;
        if (f.type.is_smooth()) continue;
        std::string label = "over " + f.label + " (x" + std::to_string(profile.degree) + ")";
        out.entries.push_back({std::nullopt, label, f.type, f.mult * profile.degree});
    }
    return out;
}

BranchProfile ramification_profile(const RatFuncQ& phi) {
    if (phi.is_constant()) fail(errc::internal, "profile of a constant map");
    const std::string& var = phi.var();
    int d = phi.map_degree();
    BranchProfile out;
    out.degree = d;

    // branch places = roots of the derivative's numerator and the poles;
    // equivalently: base places whose pullback divisor has a repeated part.
    // We scan the base places below the critical points of phi.
    std::vector<std::pair<Place, std::string>> base_places;
    {
        // finite critical values: roots of disc-like data; instead of solving,
        // collect candidate base places from the fibers of phi over the
        // critical points: every critical point u0 (root of num(phi')) maps to
        // phi(u0); places of those values arise as factors of num(phi - c).
        // We avoid root-finding by a different route: a base place q is
        // branched iff gcd(N_q, N_q') is nonconstant, where N_q is the
        // numerator of q(phi(u)). Candidate q's come from factoring the
        // discriminant-with-respect-to-u data; here we factor the numerator of
        // phi' and push forward each critical place.
        RatFuncQ dphi = RatFuncQ(phi.num().derivative()) * RatFuncQ(phi.den()) -
                        RatFuncQ(phi.num()) * RatFuncQ(phi.den().derivative());
        PolyQ crit = dphi.num();
        std::vector<PolyQ> crit_places;
        if (crit.degree() >= 1) {
            Factorization fac = factor_poly(crit);
            if (!fac.fully_factored())
                fail(errc::unfactored, "critical locus could not be factored");
            for (const auto& u : fac.irreducible) crit_places.push_back(u.poly);
        }
        std::vector<std::string> seen;
        auto push_value = [&](const Place& p, const std::string& label) {
            std::string key = place_key(p);
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
            seen.push_back(key);
            base_places.emplace_back(p, label);
        };
        for (const PolyQ& cp : crit_places) {
            if (cp.degree() != 1)
                fail(errc::unsupported, "critical points of degree > 1 are not supported here");
            Rational u0 = -cp[0];
            // the image phi(u0), possibly infinity
            if (is_zero(phi.den().eval(u0))) {
                push_value(Place::infinity(), "inf");
            } else {
                Rational value = phi.eval(u0);
                push_value(Place::at(value, var), value.str());
            }
        }
        // infinity upstairs maps to phi(inf)
        int deg_gap = phi.num().degree() - phi.den().degree();
        if (deg_gap > 0) push_value(Place::infinity(), "inf");
        else if (deg_gap < 0) push_value(Place::at(Rational(0), var), "0");
        else {
            Rational value = phi.num().lead() / phi.den().lead();
            push_value(Place::at(value, var), value.str());
        }
    }

    for (auto& [p, label] : base_places) {
        // pullback divisor of the base place p under phi
        std::vector<int> partition;
        int accounted = 0;
        PolyQ pulled;
        if (p.is_infinity()) {
            pulled = phi.den();
        } else {
            // numerator of p(phi(u)) = phi_num - root * phi_den  (p is linear)
            Rational root = -p.poly()[0];
            pulled = phi.num() - PolyQ::constant(root) * phi.den();
        }
        if (pulled.degree() >= 1) {
            Factorization fac = factor_poly(pulled);
            if (!fac.fully_factored()) fail(errc::unfactored, "fiber of phi could not be factored");
            for (const auto& u : fac.irreducible) {
                for (int c = 0; c < u.poly.degree(); ++c) partition.push_back(u.multiplicity);
                accounted += u.multiplicity * u.poly.degree();
            }
        }
        if (accounted < d) partition.push_back(d - accounted); // the point at infinity upstairs
        std::sort(partition.rbegin(), partition.rend());
        bool trivial = true;
        for (int e : partition) trivial = trivial && e == 1;
        if (trivial) continue;
        ProfileEntry entry;
        entry.place = p;
        entry.label = label;
        entry.partition = std::move(partition);
        out.entries.push_back(std::move(entry));
    }
    out.validate();
    return out;
}

namespace {

std::string multiset_str(const FiberConfig& c) {
    std::string s;
    for (auto& [t, n] : c.type_multiset()) s += (s.empty() ? "" : " + ") + std::to_string(n) + "x" + t.str();
    return s.empty() ? "(none)" : s;
}

} // namespace

CrossValidation cross_validate(const WeierstrassModel& m, const RatFuncQ& phi,
                               const BranchProfile& profile) {
    profile.validate();
    // the profile must be exactly the computed ramification of phi
    BranchProfile computed = ramification_profile(phi);
    if (computed.degree != profile.degree)
        fail(errc::mismatch, "profile degree " + std::to_string(profile.degree) +
                                 " does not match the map degree " + std::to_string(computed.degree));
    auto normalize = [](const BranchProfile& p) {
        std::map<std::string, std::vector<int>> out;
        for (const auto& e : p.entries) {
            if (!e.place) fail(errc::mismatch, "cross-validation requires concrete branch places");
            out[place_key(*e.place)] = e.partition;
        }
        return out;
    };
    auto a = normalize(profile), b = normalize(computed);
    if (a != b)
        fail(errc::mismatch, "stated profile {" + profile.str() + "} differs from computed {" +
                                 computed.str() + "}");

    CrossValidation out;
    out.symbolic = full_config(pullback_model(m, phi));
    out.combinatorial = transported_config(full_config(m), profile);
    if (out.symbolic.type_multiset() != out.combinatorial.type_multiset())
        fail(errc::mismatch, "symbolic gives " + multiset_str(out.symbolic) +
                                 " but the transition table gives " + multiset_str(out.combinatorial));
    out.summary = multiset_str(out.symbolic);
    return out;
}

RatFuncQ BranchQuadratic::eval_at(const RatFuncQ& r) const {
    auto embed = [](const RatFuncQ& c) { return c; };
    return quadratic.eval_gen(r, embed);
}

PolyQ BranchQuadratic::specialize(const Rational& a) const {
    std::vector<Rational> cs;
    for (int i = 0; i <= quadratic.degree(); ++i) cs.push_back(quadratic[i].eval(a));
    return PolyQ("r", cs);
}

BranchQuadratic branch_points_of_Ea() {
    BranchQuadratic b;
    b.quadratic = parse_poly_param("r^2 - (2a+2)*r + (a-1)^2", "r", "a");
    return b;
}

namespace {

BranchProfile named_profile(const std::string& text) { return BranchProfile::parse(text, "v"); }

} // namespace

BranchProfile profile_Ya_generic() { return named_profile("d=3; 0:3; inf:3; r1:2+1; r2:2+1"); }
BranchProfile profile_Y4() { return named_profile("d=3; 0:3; inf:3; 9:2+1; 1:2+1"); }
BranchProfile profile_Y0() { return named_profile("d=3; 0:3; 1:3; inf:3"); }
BranchProfile profile_Zprime() { return named_profile("d=3; inf:3; 0:2+1; 4:2+1"); }

} // namespace eesurf
