#include "ccipher/cipher.hpp"

#include "ccipher/decimal.hpp"
#include "ccipher/errors.hpp"
#include "ccipher/key_schedule.hpp"
#include "ccipher/substitution.hpp"

namespace ccipher {

Bytes encrypt(const Bytes& plaintext, const Bytes& password) {
    const SubKeys keys = derive_subkeys(password);
    const SubstitutionTable table = build_tables(keys.ckey1_residue);
    const ColumnKey key(keys.ckey2);

    Bytes out = substitute(table, plaintext);
    out = transpose(out, key);
    out = transpose(out, key);
    return out;
}

Bytes decrypt(const Bytes& ciphertext, const Bytes& password) {
    const SubKeys keys = derive_subkeys(password);
    const SubstitutionTable table = build_tables(keys.ckey1_residue);
    const ColumnKey key(keys.ckey2);

    Bytes out = inverse_transpose(ciphertext, key);
    out = inverse_transpose(out, key);
    return unsubstitute(table, out);
}

namespace {

int normalize_shift(long long shift) {
    return static_cast<int>(((shift % 26) + 26) % 26);
}

std::uint8_t shift_letter(std::uint8_t b, int n) {
    if (b >= 'A' && b <= 'Z') return static_cast<std::uint8_t>('A' + (b - 'A' + n) % 26);
    if (b >= 'a' && b <= 'z') return static_cast<std::uint8_t>('a' + (b - 'a' + n) % 26);
    return b;
}

}  // namespace

Bytes caesar_encrypt(const Bytes& text, long long shift) {
    const int n = normalize_shift(shift);
    Bytes out;
    out.reserve(text.size());
    for (std::uint8_t b : text) out.push_back(shift_letter(b, n));
    return out;
}

Bytes caesar_decrypt(const Bytes& text, long long shift) {
    return caesar_encrypt(text, -shift);
}

KeySpace key_space_size(unsigned password_length) {
    if (password_length == 0) throw InvalidKeyError("password length must be at least 1");
    return KeySpace{decimal_pow(256, password_length), decimal_pow(password_length, 256)};
}

Bytes apply_cipher(const CipherConfig& config, Direction direction, const Bytes& text) {
    const bool enc = direction == Direction::Encrypt;
    return std::visit(
        [&](const auto& c) -> Bytes {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ModifiedCipher>) {
                return enc ? encrypt(text, c.password) : decrypt(text, c.password);
            } else if constexpr (std::is_same_v<T, CaesarCipher>) {
                return enc ? caesar_encrypt(text, c.shift) : caesar_decrypt(text, c.shift);
            } else {
                return enc ? transpose(text, c.key, c.pad) : inverse_transpose(text, c.key, c.pad);
            }
        },
        config);
}

}  // namespace ccipher
