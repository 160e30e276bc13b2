#pragma once

#include <string>
#include <string_view>

#include "sierpinski/path.hpp"

namespace sierpinski {

/// One "re,im" line per point with 17 significant digits, an empty line per
/// pen-up. LF line endings.
std::string write_csv(const PointPath& g);

/// Inverse of write_csv. Throws ParseError carrying the 1-based line number.
PointPath read_csv(std::string_view text);

}  // namespace sierpinski
