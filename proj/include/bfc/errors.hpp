#pragma once

#include <stdexcept>
#include <string>

namespace bfc {

// Bad argument from the caller: mismatched arities, malformed input, values
// outside the documented domain.  CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit would be exceeded.  Operations that can still
// say something useful return bounds instead of throwing; this is for the
// ones that cannot.  CLI maps this to exit code 2.
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A proven invariant failed at runtime.  Always a bug, never user error.
// CLI maps this to exit code 3.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bfc
