#include "ccipher/decimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccipher {

std::string decimal_mul_add(std::string_view value, unsigned multiplier, unsigned addend) {
    if (value.empty()) throw std::invalid_argument("empty decimal value");
    // work least-significant digit first
    std::string digits(value.rbegin(), value.rend());
    unsigned long long carry = addend;
    for (char& ch : digits) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("non-digit in decimal value");
        const unsigned long long t =
            static_cast<unsigned long long>(ch - '0') * multiplier + carry;
        ch = static_cast<char>('0' + t % 10);
        carry = t / 10;
    }
    while (carry > 0) {
        digits.push_back(static_cast<char>('0' + carry % 10));
        carry /= 10;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string decimal_pow(unsigned base, unsigned exponent) {
    std::string out = "1";
    for (unsigned i = 0; i < exponent; ++i) out = decimal_mul_add(out, base, 0);
    return out;
}

}  // namespace ccipher
