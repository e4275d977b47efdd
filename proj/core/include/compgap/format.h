#pragma once

#include <string>

namespace compgap {

// Fixed-point text with `decimals` digits, rounded from the exact binary
// value (ties to even). Negative zero prints without the sign.
std::string format_fixed(double value, int decimals);

// Shortest text that round-trips to the same double.
std::string format_exact(double value);

}  // namespace compgap
