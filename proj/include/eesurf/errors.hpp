#pragma once

#include <stdexcept>
#include <string>

namespace eesurf {

// Error categories shared across the toolkit. Each computational routine
// that can fail throws calc_error with the matching code; callers that
// want to present errors (CLI, reports) switch on the code.
enum class errc {
    degenerate,          // discriminant vanishes identically / excluded parameter value
    degree_violation,    // coefficient degree exceeds the model's degree bound
    unfactored,          // factorization routine could not certify a factor
    nonintegral,         // a quantity that must be an integer is not
    parity,              // parity precondition failed (Milnor-Jung, Riemann-Hurwitz)
    unsupported,         // outside the implemented table / degree range
    bad_component,       // invalid fiber component index
    exceeds_h11,         // Shioda-Tate rank above h^{1,1}
    mismatch,            // cross-validation disagreement
    not_relatively_minimal,
    divergent_tail,      // |q| >= 1 in a series evaluation
    excluded_parameter,
    unrecognized,        // terminal graph not a known Kodaira dual graph
    internal
};

class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw calc_error(code, what); }

} // namespace eesurf
