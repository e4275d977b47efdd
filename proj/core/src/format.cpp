#include "compgap/format.h"

#include <fmt/format.h>

namespace compgap {

std::string format_fixed(double value, int decimals) {
  std::string out = fmt::format("{:.{}f}", value, decimals);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_exact(double value) { return fmt::format("{}", value); }

}  // namespace compgap
