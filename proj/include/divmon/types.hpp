// Basic vocabulary shared by every divmon header: letters, words and the
// exception hierarchy.

#ifndef DIVMON_TYPES_HPP_
#define DIVMON_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace divmon {

// A letter is an index into the generator list of a Presentation.
using letter_type = std::uint32_t;

// A word is a (possibly empty) sequence of letters.
using Word = std::vector<letter_type>;

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (letter_type x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Base class of every exception thrown by this library.
struct DivmonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (presentation or machine files); line is 1-based.
struct ParseError : DivmonError {
  ParseError(std::string const& msg, std::size_t line_number)
      : DivmonError(msg), line(line_number) {}
  std::size_t line;
};

// The brute-force oracle hit one of its configured caps.
struct OracleLimitError : DivmonError {
  using DivmonError::DivmonError;
};

// A uniqueness or existence assertion failed mid-computation: the input
// presentation does not present a left divisibility monoid.
struct InvalidMonoidError : DivmonError {
  using DivmonError::DivmonError;
};

// Caller misuse: quotient of a non-divisor, unknown vertex id, and the like.
struct DomainError : DivmonError {
  using DivmonError::DivmonError;
};

}  // namespace divmon

#endif  // DIVMON_TYPES_HPP_
