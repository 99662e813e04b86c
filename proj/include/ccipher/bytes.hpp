#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccipher {

using Bytes = std::vector<std::uint8_t>;

Bytes to_bytes(std::string_view text);
std::string to_string(const Bytes& bytes);

std::string to_hex(const Bytes& bytes);
Bytes from_hex(std::string_view hex);

}  // namespace ccipher
