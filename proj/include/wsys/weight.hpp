#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace wsys {

// Exact integer weights. Level flattening multiplies weights across levels,
// so fixed-width types would overflow silently.
using Weight = boost::multiprecision::cpp_int;

using Level = std::uint64_t;

inline std::string to_string(const Weight& w) { return w.str(); }

// Parses an optionally signed decimal integer; nullopt on any other input.
std::optional<Weight> parse_weight(std::string_view text);

}  // namespace wsys
