#include "lfl/int128.hpp"

#include <algorithm>

#include "lfl/core.hpp"

namespace lfl {

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so the minimum is representable.
  std::string out;
  Int128 x = negative ? v : -v;
  while (x != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int128 checked_mul_add(Int128 a, Int128 b, Int128 c) {
  Int128 product;
  Int128 sum;
  if (__builtin_mul_overflow(a, b, &product) || __builtin_add_overflow(product, c, &sum)) {
    throw RangeError("128-bit coefficient overflow");
  }
  return sum;
}

}  // namespace lfl
