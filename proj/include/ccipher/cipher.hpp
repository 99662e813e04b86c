#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "ccipher/bytes.hpp"
#include "ccipher/transposition.hpp"

namespace ccipher {

// Keyed byte substitution followed by two ragged columnar passes under the
// derived column order. Length preserving and fully invertible.
Bytes encrypt(const Bytes& plaintext, const Bytes& password);
Bytes decrypt(const Bytes& ciphertext, const Bytes& password);

// Classical shift cipher. Letters rotate within their case; all other bytes
// pass through. Any integer shift is accepted and reduced mod 26.
Bytes caesar_encrypt(const Bytes& text, long long shift);
Bytes caesar_decrypt(const Bytes& text, long long shift);

struct KeySpace {
    std::string password_count;  // 256^length: distinct byte passwords of this length
    std::string swapped_count;   // length^256: the same expression with base and exponent swapped
};
KeySpace key_space_size(unsigned password_length);

struct ModifiedCipher {
    Bytes password;
};
struct CaesarCipher {
    long long shift = 0;
};
struct ColumnarCipher {
    ColumnKey key;
    std::uint8_t pad = 'z';
};
using CipherConfig = std::variant<ModifiedCipher, CaesarCipher, ColumnarCipher>;

enum class Direction { Encrypt, Decrypt };

Bytes apply_cipher(const CipherConfig& config, Direction direction, const Bytes& text);

}  // namespace ccipher
