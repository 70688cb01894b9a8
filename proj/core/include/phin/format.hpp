#pragma once

#include <string>

namespace phin {

/// Shortest decimal that parses back to exactly `v` ('.' separator, no locale).
std::string format_double(double v);

/// Parses the output of format_double; DomainError on malformed text.
double parse_double(const std::string& text);

}  // namespace phin
