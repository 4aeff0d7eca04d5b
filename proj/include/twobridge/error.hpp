#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Malformed textual input (slopes, words, sequences, JSON documents).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A self-check failed. Always a bug in this library, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace twobridge
