#pragma once

#include <stdexcept>
#include <string>

namespace oscsym {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A quadratic observable has no expansion over the generator span.
struct NotInSpan : std::domain_error {
    using std::domain_error::domain_error;
};

/// Brute-forced bracket left the generator span; indicates an implementation bug.
struct ExpressionNotInSpan : std::logic_error {
    using std::logic_error::logic_error;
};

/// f-basis operations require omega, which the alpha = 0 mode does not have.
struct ZeroModeUnsupported : std::domain_error {
    using std::domain_error::domain_error;
};

/// Some Delta_i vanished; the discretization map is undefined there.
struct SingularStep : std::domain_error {
    using std::domain_error::domain_error;
};

/// Matrix-family inverse requested with a zero pivot parameter.
struct SingularFamilyMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

/// The Nambu density is singular where L_{1,2} vanishes.
struct DegenerateAngularMomentum : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace oscsym
