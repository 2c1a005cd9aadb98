#include "prismcurv/format.hpp"

#include <charconv>
#include <cmath>

namespace prismcurv {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace prismcurv
