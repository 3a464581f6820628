#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacquet
{

// Every failure that stems from the mathematical input (as opposed to a
// malformed command line) derives from DomainError.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class RegistryConflict : public DomainError
{
public:
    using DomainError::DomainError;
};

class UnknownLabel : public DomainError
{
public:
    using DomainError::DomainError;
};

class InvalidSegment : public DomainError
{
public:
    using DomainError::DomainError;
};

class EmptySegment : public DomainError
{
public:
    using DomainError::DomainError;
};

class KindMismatch : public DomainError
{
public:
    using DomainError::DomainError;
};

class ShapeOverflow : public DomainError
{
public:
    using DomainError::DomainError;
};

class TermLimitExceeded : public DomainError
{
public:
    using DomainError::DomainError;
};

class InvalidParams : public DomainError
{
public:
    using DomainError::DomainError;
};

class NonBijection : public DomainError
{
public:
    using DomainError::DomainError;
};

class BoundExceeded : public DomainError
{
public:
    using DomainError::DomainError;
};

class IncompatibleLevi : public DomainError
{
public:
    using DomainError::DomainError;
};

class InvalidDatum : public DomainError
{
public:
    using DomainError::DomainError;
};

class UndeclaredReducibility : public DomainError
{
public:
    using DomainError::DomainError;
};

// Syntax errors in the expression language. Positions are 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          m_line(line), m_column(column)
    {
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace jacquet
