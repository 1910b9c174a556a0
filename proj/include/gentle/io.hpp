// Plain-text quiver files.
//
//   quiver <name>
//   vertex <name>
//   arrow <name>: <source> -> <target>
//   relation <first> <second>
//
// '#' starts a comment; blank lines are ignored.

#ifndef GENTLE_IO_HPP_
#define GENTLE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gentle/quiver.hpp"

namespace gentle {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::string const& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

BoundQuiver parse_quiver(std::string_view text);
BoundQuiver read_quiver_file(std::string const& path);  // throws ParseError, std::runtime_error

// Canonical text: sorted declarations, one per line, trailing newline.
std::string serialize(BoundQuiver const& q);

// FNV-1a 64-bit of the canonical text with the quiver name dropped; 16 hex digits.
std::string digest(BoundQuiver const& q);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace gentle

#endif  // GENTLE_IO_HPP_
