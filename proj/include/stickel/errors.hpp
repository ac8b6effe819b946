#pragma once

#include <stdexcept>
#include <string>

namespace stickel {

// Rejected caller input: non-prime moduli, q = p, hypotheses
// not met. Maps to exit code 2 in the CLI.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical identity that must hold did not. Maps to exit code 1.
class invariant_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hensel precision or valuation cap exhausted.
class precision_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stickel
