#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ifdist {

/// Shortest round-trip decimal for `v` ("inf", "-inf", "nan" for non-finite).
std::string format_exact(double v);

/// At most 15 significant digits, trailing zeros dropped, '.' separator.
std::string format_number(double v);

/// Locale-independent decimal parse of the whole string.
std::optional<double> parse_number(std::string_view text);

}  // namespace ifdist
