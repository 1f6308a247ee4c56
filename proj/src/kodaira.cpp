#include "eesurf/kodaira.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eesurf {

KodairaType KodairaType::parse(const std::string& s) {
    auto starred = [&](const std::string& body) { return s == body + "*"; };
    if (s == "II") return make(FiberClass::II);
    if (s == "III") return make(FiberClass::III);
    if (s == "IV") return make(FiberClass::IV);
    if (starred("II")) return make(FiberClass::IIstar);
    if (starred("III")) return make(FiberClass::IIIstar);
    if (starred("IV")) return make(FiberClass::IVstar);
    if (!s.empty() && s[0] == 'I') {
        std::string rest = s.substr(1);
        bool star = !rest.empty() && rest.back() == '*';
        if (star) rest.pop_back();
        if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
            int n = std::stoi(rest);
            if (star) return n == 0 ? make(FiberClass::I0star) : Istar(n);
            return I(n);
        }
    }
    fail(errc::internal, "unknown Kodaira type: " + s);
}

int KodairaType::euler() const {
    switch (cls) {
    case FiberClass::In: return n;
    case FiberClass::II: return 2;
    case FiberClass::III: return 3;
    case FiberClass::IV: return 4;
    case FiberClass::I0star: return 6;
    case FiberClass::Instar: return n + 6;
    case FiberClass::IVstar: return 8;
    case FiberClass::IIIstar: return 9;
    case FiberClass::IIstar: return 10;
    }
    fail(errc::internal, "bad fiber class");
}

int KodairaType::components() const {
    switch (cls) {
    case FiberClass::In: return n == 0 ? 1 : n;
    case FiberClass::II: return 1;
    case FiberClass::III: return 2;
    case FiberClass::IV: return 3;
    case FiberClass::I0star: return 5;
    case FiberClass::Instar: return n + 5;
    case FiberClass::IVstar: return 7;
    case FiberClass::IIIstar: return 8;
    case FiberClass::IIstar: return 9;
    }
    fail(errc::internal, "bad fiber class");
}

std::array<std::array<long long, 2>, 2> KodairaType::monodromy() const {
    switch (cls) {
    case FiberClass::In: return {{{1, n}, {0, 1}}};
    case FiberClass::II: return {{{1, 1}, {-1, 0}}};
    case FiberClass::III: return {{{0, 1}, {-1, 0}}};
    case FiberClass::IV: return {{{0, 1}, {-1, -1}}};
    case FiberClass::I0star: return {{{-1, 0}, {0, -1}}};
    case FiberClass::Instar: return {{{-1, -n}, {0, -1}}};
    case FiberClass::IVstar: return {{{-1, -1}, {1, 0}}};
    case FiberClass::IIIstar: return {{{0, -1}, {1, 0}}};
    case FiberClass::IIstar: return {{{0, -1}, {1, 1}}};
    }
    fail(errc::internal, "bad fiber class");
}

namespace {

using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 c{{{0, 0}, {0, 0}}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

bool mat_is_identity(const Mat2& a) {
    return a[0][0] == 1 && a[0][1] == 0 && a[1][0] == 0 && a[1][1] == 1;
}

} // namespace

std::optional<int> KodairaType::monodromy_order() const {
    Mat2 m = monodromy();
    Mat2 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (mat_is_identity(p)) return k;
        p = mat_mul(p, m);
    }
    // quasi-unipotent of infinite order: M or M^2 is a nontrivial unipotent
    Mat2 m2 = mat_mul(m, m);
    bool uni1 = m[0][0] + m[1][1] == 2 && !mat_is_identity(m);
    bool uni2 = m2[0][0] + m2[1][1] == 2 && !mat_is_identity(m2);
    if (uni1 || uni2) return std::nullopt;
    fail(errc::internal, "monodromy neither finite nor quasi-unipotent");
}

Rational KodairaType::contr(int i, int j) const {
    if (i > j) std::swap(i, j);
    int mc = components();
    auto bad = [&] { fail(errc::bad_component, "invalid component pair for " + str()); };
    if (i < 0) bad();
    if (cls == FiberClass::In) {
        if (n == 0 || j >= n) bad();
        return Rational(i * (n - j), n);
    }
    if (i == 0) return Rational(0);
    switch (cls) {
    case FiberClass::IV:
        if (j > 2) bad();
        return i == j ? Rational(2, 3) : Rational(1, 3);
    case FiberClass::IVstar:
        if (j > 2) bad();
        return i == j ? Rational(4, 3) : Rational(2, 3);
    case FiberClass::III:
        if (j > 1) bad();
        return Rational(1, 2);
    case FiberClass::IIIstar:
        if (j > 1) bad();
        return Rational(3, 2);
    case FiberClass::I0star:
        if (j > 4) bad();
        return i == j ? Rational(1) : Rational(1, 2);
    case FiberClass::Instar:
        // 1 = near component, 2 and 3 = far components
        if (j > 3) bad();
        if (i == 1 && j == 1) return Rational(1);
        if (i == 1) return Rational(1, 2);
        if (i == j) return Rational(1) + Rational(n, 4);
        return Rational(1, 2) + Rational(n, 4);
    case FiberClass::II:
        bad();
    default: bad();
    }
    return Rational(0);
}

std::string KodairaType::str() const {
    switch (cls) {
    case FiberClass::In: return "I" + std::to_string(n);
    case FiberClass::II: return "II";
    case FiberClass::III: return "III";
    case FiberClass::IV: return "IV";
    case FiberClass::I0star: return "I0*";
    case FiberClass::Instar: return "I" + std::to_string(n) + "*";
    case FiberClass::IVstar: return "IV*";
    case FiberClass::IIIstar: return "III*";
    case FiberClass::IIstar: return "II*";
    }
    fail(errc::internal, "bad fiber class");
}

bool operator<(const KodairaType& a, const KodairaType& b) {
    if (a.euler() != b.euler()) return a.euler() < b.euler();
    if (a.cls != b.cls) return static_cast<int>(a.cls) < static_cast<int>(b.cls);
    return a.n < b.n;
}

int FiberConfig::total_euler() const {
    int e = 0;
    for (const auto& f : entries) e += f.mult * f.type.euler();
    return e;
}

int FiberConfig::fiber_count() const {
    int c = 0;
    for (const auto& f : entries)
        if (!f.type.is_smooth()) c += f.mult;
    return c;
}

std::vector<std::pair<KodairaType, int>> FiberConfig::type_multiset() const {
    std::map<std::string, std::pair<KodairaType, int>> agg;
    for (const auto& f : entries) {
        if (f.type.is_smooth()) continue;
        auto [it, fresh] = agg.emplace(f.type.str(), std::make_pair(f.type, 0));
        it->second.second += f.mult;
    }
    std::vector<std::pair<KodairaType, int>> out;
    for (auto& [k, v] : agg) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string FiberConfig::summary() const {
    auto types = type_multiset();
    if (types.empty()) return "(no singular fibers)";
    std::string out;
    for (const auto& [type, count] : types) {
        if (!out.empty()) out += " + ";
        if (count > 1) out += std::to_string(count);
        out += type.str();
    }
    return out;
}

std::string FiberConfig::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& f : entries) {
        if (!first) os << ",";
        first = false;
        os << "{\"place\":\"" << f.label << "\",\"type\":\"" << f.type.str()
           << "\",\"mult\":" << f.mult << "}";
    }
    os << "]";
    return os.str();
}

namespace {

int valuation_or_max(const RatFuncQ& f, const Place& p) {
    return f.is_zero_fn() ? kValuationInfinity : valuation(f, p);
}

// Classify from the minimalized valuation triple.
KodairaType classify(int vc4, int vc6, int vd) {
    if (vd == 0) return KodairaType::I(0);
    if (vc4 == 0) return KodairaType::I(vd);
    if (vc4 != kValuationInfinity && 3 * vc4 < vd) return KodairaType::Istar(vd - 6);
    switch (vd) {
    case 2: return KodairaType::make(FiberClass::II);
    case 3: return KodairaType::make(FiberClass::III);
    case 4: return KodairaType::make(FiberClass::IV);
    case 6: return KodairaType::make(FiberClass::I0star);
    case 8: return KodairaType::make(FiberClass::IVstar);
    case 9: return KodairaType::make(FiberClass::IIIstar);
    case 10: return KodairaType::make(FiberClass::IIstar);
    default:
        fail(errc::internal,
             "minimal valuations (" + std::to_string(vc4) + "," + std::to_string(vc6) + "," +
                 std::to_string(vd) + ") fit no Kodaira type");
    }
}

LocalFiber tate_local_finite(const WeierstrassModel& m, const Place& p) {
    StdInvariants s = std_invariants(m);
    int vc4 = valuation_or_max(s.c4, p);
    int vc6 = valuation_or_max(s.c6, p);
    int vd = valuation(s.disc, p);

    // Consistency: the unit part of the discriminant must be nonzero in the
    // residue field at p.
    {
        ResidueField F = p.residue_field();
        RatFuncQ unit = s.disc / RatFuncQ(p.poly()).pow(vd);
        PolyQ reduced_num = F.reduce(unit.num());
        PolyQ reduced_den = F.reduce(unit.den());
        if (reduced_num.is_zero_poly() || reduced_den.is_zero_poly())
            fail(errc::internal, "discriminant unit part vanishes in the residue field");
    }

    auto floor_div = [](int v, int q) {
        int f = v / q;
        if (v < 0 && f * q != v) --f;
        return f;
    };
    // one rescale x -> pi^2 x, y -> pi^3 y shifts (vc4, vc6, vd) by (-4, -6, -12)
    int k = floor_div(vd, 12);
    if (vc4 != kValuationInfinity) k = std::min(k, floor_div(vc4, 4));
    if (vc6 != kValuationInfinity) k = std::min(k, floor_div(vc6, 6));

    WeierstrassModel minimal = m;
    if (k != 0) {
        RatFuncQ u = RatFuncQ(p.poly()).pow(k);
        minimal = transform_model(m, u, RatFuncQ(0), RatFuncQ(0), RatFuncQ(0), m.degree_bound());
    }
    if (vc4 != kValuationInfinity) vc4 -= 4 * k;
    if (vc6 != kValuationInfinity) vc6 -= 6 * k;
    vd -= 12 * k;

    LocalFiber out{classify(vc4, vc6, vd), minimal, vd, k};
    return out;
}

} // namespace

LocalFiber tate_local(const WeierstrassModel& m, const Place& p) {
    if (p.is_infinity()) {
        WeierstrassModel chart = chart_at_infinity(m);
        return tate_local_finite(chart, Place(PolyQ::gen(chart.var())));
    }
    return tate_local_finite(m, p);
}

FiberConfig full_config(const WeierstrassModel& m) {
    StdInvariants s = std_invariants(m);
    FiberConfig config;

    std::vector<PolyQ> support;
    for (const PolyQ& part : {s.disc.num(), s.disc.den()}) {
        if (part.degree() < 1) continue;
        Factorization fac = factor_poly(part);
        if (!fac.fully_factored())
            fail(errc::unfactored,
                 "discriminant support could not be fully factored: " +
                     fac.unfactored.front().poly.str());
        for (const auto& unit : fac.irreducible) support.push_back(unit.poly);
    }
    // order: linear places by their root on the line, then higher-degree places
    std::sort(support.begin(), support.end(), [](const PolyQ& a, const PolyQ& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.degree() == 1) return -a[0] < -b[0];
        for (int i = 0; i <= a.degree(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    support.erase(std::unique(support.begin(), support.end()), support.end());

    for (const PolyQ& p : support) {
        Place place(p);
        LocalFiber lf = tate_local(m, place);
        if (lf.type.is_smooth()) continue;
        config.entries.push_back({place, place.str(), lf.type, place.degree()});
    }
    LocalFiber at_inf = tate_local(m, Place::infinity());
    if (!at_inf.type.is_smooth())
        config.entries.push_back({Place::infinity(), "inf", at_inf.type, 1});
    return config;
}

SurfaceInvariants surface_invariants(const FiberConfig& config) {
    int chi = config.total_euler();
    if (chi <= 0)
        fail(errc::degenerate, "Euler number must be positive for a non-isotrivial surface");
    if (chi % 12 != 0)
        fail(errc::not_relatively_minimal,
             "total Euler number " + std::to_string(chi) + " is not divisible by 12");
    SurfaceInvariants s;
    s.chi = chi;
    s.deg_l = chi / 12;
    s.q = config.genus;
    s.p_g = s.deg_l + config.genus - 1;
    s.h11 = 10 * s.deg_l + 2 * config.genus;
    if (config.genus == 0 && s.deg_l == 1) s.classification = "rational";
    else if (config.genus == 0 && s.deg_l == 2) s.classification = "K3";
    else if (config.genus == 1 && s.deg_l == 1) s.classification = "elliptic-elliptic";
    else s.classification = "(" + std::to_string(config.genus) + "," + std::to_string(s.deg_l) + ")";
    return s;
}

int moduli_dimension(int d, int g) { return 10 * d + 2 * g - 2; }

} // namespace eesurf
