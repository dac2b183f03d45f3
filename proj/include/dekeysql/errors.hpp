#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dekeysql {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

/// Raised when a database file opens fine but contains zero user tables.
class EmptyDatabaseError : public CatalogError {
public:
    using CatalogError::CatalogError;
};

/// Transient transport failure (connection refused, 5xx, timeout). Retryable.
class TransportError : public Error {
public:
    using Error::Error;
};

/// Non-retryable client failure (bad request, missing transcript entry, ...).
class ClientError : public Error {
public:
    using Error::Error;
};

/// Model output had no parseable payload even after the single re-ask.
/// Carries the raw model text for audit.
class NluParseError : public Error {
public:
    NluParseError(const std::string& message, std::string raw)
        : Error(message), raw_(std::move(raw)) {}
    const std::string& raw() const noexcept { return raw_; }

private:
    std::string raw_;
};

/// Parsed output violated the structural invariants (numbering, empty keywords, ...).
class NluValidationError : public Error {
public:
    NluValidationError(const std::string& message, std::vector<std::string> violations)
        : Error(message), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

/// revise() called on a candidate that already reached the hard iteration cap.
class RevisionCapError : public Error {
public:
    using Error::Error;
};

/// A retrieval candidate that does not resolve against the catalog.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Wraps an upstream failure with the pipeline stage that raised it.
class PipelineError : public Error {
public:
    PipelineError(std::string stage, const std::string& message)
        : Error(stage + ": " + message), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace dekeysql
