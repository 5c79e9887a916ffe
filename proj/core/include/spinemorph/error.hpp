#pragma once

#include <stdexcept>
#include <string>

namespace spinemorph {

// Error taxonomy mirrored by the CLI exit codes (2/3/4).
enum class ErrorKind { config, data, runtime };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error(ErrorKind::config, message) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& message) : Error(ErrorKind::data, message) {}
};

class RuntimeError : public Error {
public:
    explicit RuntimeError(const std::string& message) : Error(ErrorKind::runtime, message) {}
};

} // namespace spinemorph
