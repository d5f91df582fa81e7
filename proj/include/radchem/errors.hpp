#pragma once

#include <stdexcept>
#include <string>

namespace radchem {

/// Invalid or inconsistent user-supplied configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Configuration that is formally valid but cannot be represented on the
/// requested grid (under-resolved cutoff annulus, initial bump, ...).
class ResolutionError : public ConfigError {
public:
    explicit ResolutionError(const std::string& msg) : ConfigError(msg) {}
};

/// A documented precondition was broken by the caller.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace radchem
