#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridrte {

/// One validation finding: machine-readable category, the offending
/// component id (may be empty for file-level problems), and a message.
struct Violation {
    std::string category;
    std::string component_id;
    std::string message;
};

std::string format_violations(const std::vector<Violation>& violations);

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (bad syntax, wrong field type, missing field).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally parsed but semantically invalid model.
struct ValidationError : Error {
    explicit ValidationError(std::vector<Violation> v)
        : Error(format_violations(v)), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

struct MissingCurve : Error {
    using Error::Error;
};

struct MissingParameter : Error {
    using Error::Error;
};

/// Scenario does not cover exactly the network's component set.
struct CoverageError : Error {
    using Error::Error;
};

struct EmptyEnsemble : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

/// Artifacts produced from different networks/parameter sets were combined.
struct FingerprintMismatch : Error {
    using Error::Error;
};

/// Hardening selector matched no component.
struct UnresolvedSelector : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace gridrte
