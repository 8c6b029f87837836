#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellop {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text did not conform to the grammar; `position` is a 0-based byte offset.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position(position) {}
    std::size_t position = 0;
};

// Two values from different variable contexts met in a binary operation.
struct ContextMismatchError : Error {
    ContextMismatchError(const std::string& what, std::string lhs, std::string rhs)
        : Error(what), lhs(std::move(lhs)), rhs(std::move(rhs)) {}
    std::string lhs;
    std::string rhs;
};

// Invalid problem file or command line; maps to CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

}  // namespace ellop
