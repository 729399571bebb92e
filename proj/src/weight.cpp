#include "wsys/weight.hpp"

#include <cctype>

namespace wsys {

std::optional<Weight> parse_weight(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  Weight value = 0;
  for (; pos < text.size(); ++pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) return std::nullopt;
    value *= 10;
    value += c - '0';
  }
  return negative ? Weight(-value) : value;
}

}  // namespace wsys
