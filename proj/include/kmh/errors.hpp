#pragma once

#include <stdexcept>

namespace kmh {

// Malformed external input: bad JSON, wrong schema, unreadable file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold by construction failed to check out.
// Signals a bug in this library (or inconsistent closed forms), never bad
// user input.
class IdentityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kmh
