#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bchroma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters fall outside the hypothesis of the theorem a routine implements.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A graph expression or file could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An exact search ran out of its node or wall-clock budget before deciding.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& message, std::uint64_t nodes)
        : Error(message), nodes_(nodes)
    {
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

} // namespace bchroma
