#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

// Error categories mirror the CLI exit codes: config 1, numerics 2, io 3.

/// Invalid parameters, malformed config files, out-of-domain user input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Domain violations and integration failures (zero mixing pool, compartment
/// escaping [0,1] beyond tolerance, degenerate game states).
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failures, always carrying the offending path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sdg
