#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hyplan {

// ASCII lowercase copy; PDDL keywords are case-insensitive.
std::string to_lower(std::string_view s);

// Shortest round-trip decimal form of a double ("0.1", "3", "-2.5e-07").
std::string format_double(double value);

// Fixed-point time for plan files: trailing zeros trimmed, at least one decimal.
std::string format_time(double seconds);

// Strict decimal literal with optional fraction/exponent; nullopt if not a number.
std::optional<double> parse_number(std::string_view text);

} // namespace hyplan
