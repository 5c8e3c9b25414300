#pragma once

#include <stdexcept>
#include <string>

namespace gvm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two scalars with different generic parts were ordered against each other.
class IncomparableScalars : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A Lie type or parabolic configuration outside the supported regime.
/// `step` carries the computed nilpotency step when that was the reason.
class InvalidSetup : public Error {
public:
    explicit InvalidSetup(const std::string& what, int step = -1)
        : Error(what), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

class WrongLieType : public Error {
public:
    using Error::Error;
};

class EqualParameters : public Error {
public:
    using Error::Error;
};

class NonIntegralWeight : public Error {
public:
    using Error::Error;
};

class UnsupportedGrid : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace gvm
