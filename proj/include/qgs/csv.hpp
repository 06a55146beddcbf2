#pragma once

#include <string>
#include <string_view>

namespace qgs {

inline constexpr std::string_view kNotAvailable = "NA";

/// Shortest round-trip decimal form, '.' separator, locale independent.
std::string format_number(double x);

}  // namespace qgs
