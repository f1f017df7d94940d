#pragma once

#include <stdexcept>
#include <string>

namespace qpde {

/// Malformed or inconsistent user input (files, specs, manifests).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical size/sanity guard tripped (register too large, non-unitary
/// operator, non-Hermitian mapping residue).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Phase falls in the sign-ambiguous band (1/4, 3/4); the evolution time t
/// is too large for the gap being measured.
struct ambiguity_error : std::runtime_error {
    explicit ambiguity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpde
