#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace profiles
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Checked 64-bit arithmetic would have wrapped.
    class OverflowError : public Error
    {
    public:
        using Error::Error;
    };

    /// A state count or index does not fit the 64-bit state space.
    class CapacityError : public Error
    {
    public:
        using Error::Error;
    };

    /// A count sequence has a zero entry followed by a nonzero one.
    class ShapeError : public Error
    {
    public:
        ShapeError(std::size_t index, const std::string & what) :
            Error(what),
            _index(index)
        {
        }

        [[nodiscard]] auto index() const -> std::size_t { return _index; }

    private:
        std::size_t _index;
    };

    /// Malformed text input. Line and column are 1-based.
    class ParseError : public Error
    {
    public:
        ParseError(std::size_t line, std::size_t column, const std::string & message) :
            Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
            _line(line),
            _column(column),
            _message(message)
        {
        }

        [[nodiscard]] auto line() const -> std::size_t { return _line; }
        [[nodiscard]] auto column() const -> std::size_t { return _column; }
        [[nodiscard]] auto message() const -> const std::string & { return _message; }

    private:
        std::size_t _line, _column;
        std::string _message;
    };

    /// An operation was called outside its domain, e.g. dividing by (0).
    class DomainError : public Error
    {
    public:
        using Error::Error;
    };

    /// The solver explored more candidate tuples than it was allowed to.
    class SearchLimitError : public Error
    {
    public:
        SearchLimitError(const std::string & what, std::uint64_t cardinality, bool cardinality_saturated) :
            Error(what),
            _cardinality(cardinality),
            _saturated(cardinality_saturated)
        {
        }

        /// Number of candidate tuples in the bounded search space (saturates at 2^64 - 1).
        [[nodiscard]] auto cardinality() const -> std::uint64_t { return _cardinality; }
        [[nodiscard]] auto cardinality_saturated() const -> bool { return _saturated; }

    private:
        std::uint64_t _cardinality;
        bool _saturated;
    };
}
