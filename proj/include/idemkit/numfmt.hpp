#pragma once

#include <string>

namespace idemkit {

/// Shortest decimal string that parses back to exactly the same double.
/// Integral values within int64 range print without a fractional part.
std::string format_double(double x);

} // namespace idemkit
