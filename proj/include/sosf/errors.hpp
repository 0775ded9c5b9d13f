#ifndef SOSF_ERRORS_HPP
#define SOSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sosf {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to different fields (or different rings).
struct field_mismatch : error {
    using error::error;
};

/// Division or inversion of a zero element.
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    using error::error;
};

/// A precondition on user-supplied data was violated.
struct bad_argument : error {
    using error::error;
};

/// A configured resource cap (nodes, pairs, enumeration size) was hit
/// before the computation could finish.
struct budget_exceeded : error {
    using error::error;
};

/// Input data is internally inconsistent (e.g. point counts that do not
/// come from any variety).
struct inconsistent_data : error {
    using error::error;
};

} // namespace sosf

#endif
