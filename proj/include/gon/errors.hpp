#pragma once

#include <stdexcept>
#include <string>

namespace gon {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Basis is singular or otherwise not a lattice basis.
struct invalid_lattice : error {
    explicit invalid_lattice(const std::string& msg) : error(msg) {}
};

// An operation that requires exact rational arithmetic was called on
// inexact data (or vice versa).
struct unsupported_exact_op : error {
    explicit unsupported_exact_op(const std::string& msg) : error(msg) {}
};

// Lattice-point enumeration exceeded the configured point/node budget.
struct enumeration_budget : error {
    explicit enumeration_budget(const std::string& msg) : error(msg) {}
};

// Polar/dual requested for a non-convex gauge.
struct not_convex : error {
    explicit not_convex(const std::string& msg) : error(msg) {}
};

// Volume or enclosing-radius requested for an unbounded body.
struct unbounded_body : error {
    explicit unbounded_body(const std::string& msg) : error(msg) {}
};

// Exhaustive permutation search refused (N too large).
struct search_space_too_large : error {
    explicit search_space_too_large(const std::string& msg) : error(msg) {}
};

// Rescaling weights violate their preconditions.
struct invalid_rho : error {
    explicit invalid_rho(const std::string& msg) : error(msg) {}
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& msg) : error(msg) {}
};

// Malformed or incomplete experiment configuration.
struct config_error : error {
    explicit config_error(const std::string& msg) : error(msg) {}
};

// A mathematical invariant the caller asked to assert was violated.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& msg) : error(msg) {}
};

} // namespace gon
