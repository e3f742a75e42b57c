#pragma once

#include <stdexcept>
#include <string>

namespace pw {

// Invalid argument values (non-finite inputs, out-of-range parameters).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Index outside a materialized window.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// A configuration that cannot support the requested computation
// (e.g. product truncation too short for the requested radius).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical result that violates a structural expectation; carries a report.
class DiagnosticError : public std::runtime_error {
public:
    explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pw
