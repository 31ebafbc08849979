#pragma once

#include <stdexcept>
#include <string>

namespace autorubric {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Network/timeout failures; retryable by the gateway.
class TransportError : public Error {
public:
    using Error::Error;
};

// Non-retryable backend status (bad request, auth, ...).
class BackendRejection : public Error {
public:
    using Error::Error;
};

// Backend answered but the payload is unusable.
class MalformedResponse : public Error {
public:
    using Error::Error;
};

// Grader completion contains no in-scale score token.
class UnparseableOutput : public Error {
public:
    using Error::Error;
};

// Reflector/refiner completion lacks the <START>/<END> wrapper.
class MissingDelimiters : public Error {
public:
    using Error::Error;
};

// A grading distribution required for misconfidence is absent/incomplete.
class MissingDistribution : public Error {
public:
    using Error::Error;
};

class InvalidGuideline : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Dataset ingestion problem; carries the 1-based source line when known.
class DatasetError : public Error {
public:
    DatasetError(const std::string& what, long line = 0)
        : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class CheckpointError : public Error {
public:
    enum class Kind { Io, SchemaVersion, HashMismatch };
    CheckpointError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Precondition violations: empty input, length mismatch, size exceeds dataset, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace autorubric
