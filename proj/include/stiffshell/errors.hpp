#pragma once

#include <stdexcept>
#include <string>

namespace stiffshell {

/// Base of every error raised by the library.
///
/// Errors may pick up a field path (e.g. "material.nu1") while they propagate
/// through the config loader; what() then reports "<field>: <message>".
class Error : public std::exception {
public:
    explicit Error(std::string message) : message_(std::move(message)) { compose(); }

    const char* what() const noexcept override { return text_.c_str(); }
    const std::string& message() const noexcept { return message_; }
    const std::string& field() const noexcept { return field_; }

    void set_field(std::string field) {
        field_ = std::move(field);
        compose();
    }

private:
    void compose() { text_ = field_.empty() ? message_ : field_ + ": " + message_; }

    std::string message_;
    std::string field_;
    std::string text_;
};

/// Generic invariant violation on an input value.
class ValidationError : public Error {
    using Error::Error;
};

class DomainError : public ValidationError {
    using ValidationError::ValidationError;
};

class MaterialReciprocityError : public ValidationError {
    using ValidationError::ValidationError;
};

class InvalidPoissonError : public ValidationError {
    using ValidationError::ValidationError;
};

class NonPositiveProfileError : public ValidationError {
    using ValidationError::ValidationError;
};

/// Malformed configuration document (syntax, unknown key, bad unit).
class ConfigParseError : public Error {
    using Error::Error;
};

class QuadratureConvergenceError : public Error {
    using Error::Error;
};

/// Principal determinant (or the w0 cofactor) below the conditioning floor.
class SingularSystemError : public Error {
    using Error::Error;
};

class AllModesNonExcitable : public Error {
    using Error::Error;
};

}  // namespace stiffshell
