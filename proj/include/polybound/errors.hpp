#ifndef POLYBOUND_ERRORS_HPP
#define POLYBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polybound {

// Malformed user input: bad coefficient lists, unparsable tokens, bad config.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dimension mismatch between operands (non-square where square is required, etc).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied outside its mathematical domain (non-Hermitian input,
// degree below a formula's requirement, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Iterative solver ran out of its sweep/iteration budget. Carries the
// off-diagonal mass (or step size) left at the point of giving up.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

} // namespace polybound

#endif
