#pragma once

#include <string>
#include <string_view>

namespace ccipher {

// Arbitrary-size non-negative decimal integers kept as digit strings
// ("0", "1260356", ...), most significant digit first.

// value * multiplier + addend
std::string decimal_mul_add(std::string_view value, unsigned multiplier, unsigned addend);

// base ^ exponent (0^0 = 1)
std::string decimal_pow(unsigned base, unsigned exponent);

}  // namespace ccipher
