#include "ccipher/key_schedule.hpp"

#include <stdexcept>

#include "ccipher/decimal.hpp"
#include "ccipher/errors.hpp"
#include "ccipher/substitution.hpp"

namespace ccipher {

Permutation dedupe_to_permutation(const std::vector<int>& raw, int n) {
    if (n < 1 || raw.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("raw sequence length must equal n");

    Permutation out;
    out.reserve(raw.size());
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    int cursor = 1;  // smallest candidate replacement; never decreases
    for (int v : raw) {
        if (v >= 1 && v <= n && !used[static_cast<std::size_t>(v)]) {
            used[static_cast<std::size_t>(v)] = true;
            out.push_back(v);
        } else {
            while (used[static_cast<std::size_t>(cursor)]) ++cursor;
            used[static_cast<std::size_t>(cursor)] = true;
            out.push_back(cursor);
        }
    }
    return out;
}

SubKeys derive_subkeys(const Bytes& password) {
    if (password.empty()) throw InvalidKeyError("password must contain at least one byte");

    SubKeys keys;
    keys.ckey1_digits = "0";
    int residue = 0;
    std::vector<int> raw;
    raw.reserve(password.size());
    for (std::uint8_t byte : password) {
        keys.ckey1_digits = decimal_mul_add(keys.ckey1_digits, 10, byte);
        // (a*10 + b) mod 127 depends only on a mod 127, so the incremental
        // residue equals the residue of the full fold
        residue = (residue * 10 + byte) % kStreamModulus;
        raw.push_back(byte % 5 + 1);
    }
    keys.ckey1_residue = residue;
    keys.ckey2 = dedupe_to_permutation(raw, static_cast<int>(password.size()));
    return keys;
}

}  // namespace ccipher
