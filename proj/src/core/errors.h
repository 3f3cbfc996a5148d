// Error taxonomy for the tropical-germ library.
//
// InputError      -> malformed input, schema violation, precondition failure
// CapabilityError -> structurally valid input outside implemented bounds
//                    (e.g. matrix dimension beyond the enumeration cap)
// Any other std::exception escaping the core is an internal error.
#pragma once

#include <stdexcept>
#include <string>

namespace tropgerm {

class TropError : public std::runtime_error {
public:
    explicit TropError(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public TropError {
public:
    explicit InputError(const std::string& msg) : TropError(msg) {}
};

class CapabilityError : public TropError {
public:
    explicit CapabilityError(const std::string& msg) : TropError(msg) {}
};

}  // namespace tropgerm
