#pragma once

#include <stdexcept>
#include <string>

namespace trustres {

// Base class for all library errors. CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class ValidationKind {
    UnknownUser,
    SelfTrust,
    DuplicateMapping,
    DuplicateBelief,
    UserOverlap,
    InvalidToken,
    NonEmptyTopologyBeliefs,
};

// Invalid network or belief-table input.
class ValidationError : public Error {
public:
    ValidationError(ValidationKind kind, const std::string& msg)
        : Error(msg), kind_(kind) {}
    ValidationKind kind() const { return kind_; }

private:
    ValidationKind kind_;
};

// Malformed file content (JSON network, POSS CSV, bench CSV).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Oracle search space exceeds the configured limit.
class DomainTooLarge : public Error {
public:
    explicit DomainTooLarge(const std::string& msg) : Error(msg) {}
};

// A rule with a non-empty negative body reached minimal_model.
class NotDefinite : public Error {
public:
    explicit NotDefinite(const std::string& msg) : Error(msg) {}
};

// Not enough data points for a scaling fit.
class InsufficientData : public Error {
public:
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace trustres
