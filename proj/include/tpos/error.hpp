#pragma once

#include <stdexcept>
#include <string>

namespace tpos {

// Raised for malformed or precondition-violating user input (bad JSON, a fan
// that fails validation, a class outside the required cone). The CLI maps it
// to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant fails; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

inline void check_invariant(bool ok, const std::string& what) {
    if (!ok) throw internal_error(what);
}

}  // namespace tpos
