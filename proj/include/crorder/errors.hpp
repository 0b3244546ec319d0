#pragma once

#include <stdexcept>
#include <string>

namespace crorder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

/// A root, simple-root index or component does not belong to the system at hand.
class NotInSystem : public Error {
public:
    using Error::Error;
};

class InvolutionError : public Error {
public:
    enum class Kind { NotTotal, NotInvolutive, NotIsometry, DoesNotPermuteRoots };

    InvolutionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

const char* to_string(InvolutionError::Kind kind) noexcept;

/// Two independent routes to the same quantity disagreed. Always an implementation bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Malformed instance document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace crorder
