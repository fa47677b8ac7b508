#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ts
{

// Base of every user-facing failure raised by the engine. Anything else that
// escapes (std::bad_alloc, logic errors) is an internal fault.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
    DivisionByZero() : Error("division by zero") {}
};

class NonRationalConstant : public Error
{
public:
    using Error::Error;
};

class NotPositive : public Error
{
public:
    using Error::Error;
};

class IndeterminateSign : public Error
{
public:
    IndeterminateSign() : Error("sign is indeterminate: no listed terms above the truncation bound") {}
};

class IndeterminateDominance : public Error
{
public:
    using Error::Error;
};

class BothZero : public Error
{
public:
    BothZero() : Error("dominance is undefined when both operands are zero") {}
};

class NotBounded : public Error
{
public:
    using Error::Error;
};

// Raised when an operation requires an exact (untruncated) argument.
class InexactArgument : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

class NotSeparated : public Error
{
public:
    NotSeparated() : Error("left set is not strictly below right set") {}
};

class SyntaxError : public Error
{
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string &found);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string> &expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

} // namespace ts
