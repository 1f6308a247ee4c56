#include "eesurf/rational.hpp"

#include <cctype>
#include <ostream>

namespace eesurf {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) fail(errc::internal, "malformed rational: " + text);
        return Rational(bigint(text));
    }
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!is_int(n) || !is_int(d)) fail(errc::internal, "malformed rational: " + text);
    bigint den(d);
    if (den == 0) fail(errc::internal, "zero denominator: " + text);
    return Rational(bigint(n), den);
}

} // namespace eesurf
