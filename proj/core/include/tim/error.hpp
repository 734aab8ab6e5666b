#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical function was called outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two vectors or matrices that must agree in shape do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A pair of waveforms is (numerically) parallel, so W_ij has rank below two.
class RankDeficiencyError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration; carries the offending field name.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace tim
