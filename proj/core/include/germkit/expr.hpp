#pragma once

#include <string>

#include "germkit/series.hpp"

namespace germkit {

// Parses "x2^2 - x1^3" style polynomial text into an exact Series.
// Operators + - * ^, integer/rational literals ("3", "1/2"), parentheses,
// and the declared variable names; for a proper extension field the
// generator name is accepted as a coefficient.
Series parse_expr(const std::string& text, const Ring& ring);

} // namespace germkit
