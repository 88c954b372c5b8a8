#pragma once

#include <stdexcept>
#include <string>

namespace cfc {

/// Malformed or out-of-range input (bad JSON, vertex outside 1..n, k = 0, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition between arguments does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A search, enumeration or pivot budget was exhausted.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cfc
