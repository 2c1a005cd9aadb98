#pragma once

#include <string>

namespace prismcurv {

/// Shortest round-trip decimal form of `x` (locale independent).
std::string format_double(double x);

}  // namespace prismcurv
