#ifndef FRACFACT_ERRORS_HPP
#define FRACFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracfact {

/// Raised when a request is well-formed but exceeds what this
/// implementation can enumerate at desk scale (e.g. brute-force word
/// counts beyond the 2^26 guard, isomorphism search beyond m=5).
/// Domain errors (bad input) use std::invalid_argument instead.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracfact

#endif
