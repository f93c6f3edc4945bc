#pragma once

#include <string>

namespace lfl {

/// Exact coefficient type (GCC/Clang extension, two's complement 128-bit).
using Int128 = __int128;

/// Decimal rendering of a 128-bit integer.
std::string to_string(Int128 v);

/// a * b + c with overflow detection; throws RangeError on overflow.
Int128 checked_mul_add(Int128 a, Int128 b, Int128 c);

}  // namespace lfl
