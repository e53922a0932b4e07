#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charp {

// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated (zero input, wrong valuation,
// context mismatch, division by zero, infinite Milnor number, ...).
struct precondition_error : error {
    using error::error;
};

// A configurable desk-scale budget was exceeded (field degree, enumeration
// size, jet-space size).  Never a mathematical failure.
struct budget_error : error {
    using error::error;
};

// Malformed textual input.  `pos` is the byte offset of the offending token.
struct parse_error : error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t at)
        : error(msg + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// Internal invariant violated.  Indicates a bug, not a user error; the
// message carries enough state to reproduce.
struct engine_error : error {
    using error::error;
};

}  // namespace charp

#endif
