#pragma once

#include <string>
#include <string_view>

#include "wsys/error.hpp"

namespace wsys::detail {

struct Token {
  enum class Kind { ident, integer, punct, directive, newline, end };
  Kind kind = Kind::end;
  std::string text;
  SourceSpan span;

  bool is(std::string_view p) const { return kind == Kind::punct && text == p; }
  bool is_ident(std::string_view w) const { return kind == Kind::ident && text == w; }
};

// Tokenizer shared by the lp and wsys readers. `%` starts a comment. With
// `newlines` set, line breaks are reported as tokens.
class Lexer {
 public:
  Lexer(std::string_view text, bool newlines) : text_(text), newlines_(newlines) {}

  const Token& peek();
  const Token& peek2();
  Token next();

  SourceSpan here() const { return pos_; }
  [[noreturn]] static void fail(const SourceSpan& at, const std::string& message) { throw ParseError(at, message); }

 private:
  Token scan();
  void advance(std::size_t n = 1);

  std::string_view text_;
  bool newlines_;
  SourceSpan pos_;
  Token buffered_[2];
  int count_ = 0;
};

std::string describe(const Token& t);

// Rejects runaway nesting before it exhausts the stack.
constexpr std::size_t kMaxDepth = 500;

}  // namespace wsys::detail
