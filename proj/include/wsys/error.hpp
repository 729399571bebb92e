#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsys {

// 1-based line/column of a diagnostic; offset is the 0-based byte position.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;

  std::string str() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theory or interpretation mentions atoms outside the vocabulary it is used with.
class VocabularyMismatch : public Error {
 public:
  using Error::Error;
};

// Invalid argument or violated precondition of an operation (unknown label,
// nonpositive factor, non level-normal input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation refuses to rewrite because a semantic guard failed
// (non-tight program, drop set with differing sums).
class SemanticRefusal : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration cap exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const SourceSpan& span, const std::string& message)
      : Error(span.str() + ": " + message), span_(span), message_(message) {}

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

}  // namespace wsys
