#pragma once

#include <stdexcept>
#include <string>

namespace disc
{

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// The instance exceeds a desk-scale guard (vertex count, bit width, |S|, ...).
class ScaleGuardError : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// Reading or writing an external file failed, or its content is malformed.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}  // namespace disc
