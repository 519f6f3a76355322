#pragma once

#include <stdexcept>
#include <string>

namespace projperm {

/// Malformed textual input (field descriptor, Mobius map, permutation, representation).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a desk-scale guard (enumeration size, oracle depth, field size).
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed: a produced object does not match its contract.
class verify_error : public std::runtime_error {
public:
    explicit verify_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace projperm
