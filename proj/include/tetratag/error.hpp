#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetratag {

// Base for every error raised by the library. Callers that only care about
// "data was bad" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed bracketed text. `offset` is the 0-based byte offset where the
// problem was detected (end of input for unterminated expressions); `line`
// and `column` are the same position, 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : Error(what + " at offset " + std::to_string(offset) + " (line " + std::to_string(line) +
              ", column " + std::to_string(column) + ")"),
        offset_(offset),
        line_(line),
        column_(column) {}
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// A tree that violates a structural precondition (childless internal node,
// unary node handed to the binarizer, reserved label, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Stripping removed every leaf of a tree.
class EmptyTreeError : public StructureError {
 public:
  EmptyTreeError() : StructureError("tree is empty after stripping") {}
};

// A tag sequence that the transition system cannot execute.
class ValidityError : public Error {
 public:
  ValidityError(std::size_t position, const std::string& reason)
      : Error("invalid tag sequence at position " + std::to_string(position) +
              ": " + reason),
        position_(position),
        reason_(reason) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

// The decoder lattice has no path ending in a single complete tree.
class NoPathError : public Error {
 public:
  using Error::Error;
};

// Score files and other on-disk formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace tetratag
