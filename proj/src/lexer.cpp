#include "lexer.hpp"

#include <cctype>

namespace wsys::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

constexpr std::string_view kPuncts[] = {"<->", ":-", ":~", "->", "<", ">", ".", ",", ";", "[", "]",
                                        "@",   "{",  "}",  "(",  ")", ":", "|", "&", "-"};

}  // namespace

void Lexer::advance(std::size_t n) {
  for (; n > 0 && pos_.offset < text_.size(); --n) {
    if (text_[pos_.offset] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }
}

Token Lexer::scan() {
  for (;;) {
    if (pos_.offset >= text_.size()) return {Token::Kind::end, "", pos_};
    const char c = text_[pos_.offset];
    if (c == '%') {
      while (pos_.offset < text_.size() && text_[pos_.offset] != '\n') advance();
      continue;
    }
    if (c == '\n') {
      Token t{Token::Kind::newline, "\n", pos_};
      advance();
      if (newlines_) return t;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance();
      continue;
    }
    break;
  }
  const SourceSpan start = pos_;
  const std::string_view rest = text_.substr(pos_.offset);
  const char c = rest.front();
  if (ident_start(c) || c == '#') {
    std::size_t n = 1;
    while (n < rest.size() && ident_char(rest[n])) ++n;
    if (c == '#' && n == 1) fail(start, "expected a directive name after '#'");
    advance(n);
    return {c == '#' ? Token::Kind::directive : Token::Kind::ident, std::string(rest.substr(0, n)), start};
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t n = 1;
    while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
    if (n < rest.size() && ident_start(rest[n])) fail(start, "malformed number");
    advance(n);
    return {Token::Kind::integer, std::string(rest.substr(0, n)), start};
  }
  for (auto p : kPuncts) {
    if (rest.starts_with(p)) {
      advance(p.size());
      return {Token::Kind::punct, std::string(p), start};
    }
  }
  const auto byte = static_cast<unsigned char>(c);
  if (std::isprint(byte)) fail(start, std::string("unexpected character '") + c + "'");
  fail(start, "unexpected byte 0x" + std::string(1, "0123456789abcdef"[byte >> 4]) +
                  std::string(1, "0123456789abcdef"[byte & 15]));
}

const Token& Lexer::peek() {
  if (count_ == 0) buffered_[count_++] = scan();
  return buffered_[0];
}

const Token& Lexer::peek2() {
  peek();
  if (count_ == 1) buffered_[count_++] = scan();
  return buffered_[1];
}

Token Lexer::next() {
  peek();
  Token t = std::move(buffered_[0]);
  if (count_ == 2) buffered_[0] = std::move(buffered_[1]);
  --count_;
  return t;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::end: return "end of input";
    case Token::Kind::newline: return "end of line";
    default: return "'" + t.text + "'";
  }
}

}  // namespace wsys::detail
