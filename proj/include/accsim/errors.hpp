#pragma once

#include <stdexcept>
#include <string>

namespace accsim {

/// Matrix/vector dimensions do not agree for the requested operation.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A factorization hit a nonpositive pivot: the matrix is not positive definite.
class NotPositiveDefinite : public std::runtime_error {
public:
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// A plant state violates its physical bounds.
class StateOutOfRange : public std::runtime_error {
public:
    explicit StateOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Base for configuration problems (bad file contents or invalid values).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Config text could not be parsed (unknown key, bad syntax, bad number).
class ParseError : public ConfigError {
public:
    explicit ParseError(const std::string& what) : ConfigError(what) {}
};

/// Parsed values violate an invariant (range, ordering, combination).
class ValidationError : public ConfigError {
public:
    explicit ValidationError(const std::string& what) : ConfigError(what) {}
};

} // namespace accsim
