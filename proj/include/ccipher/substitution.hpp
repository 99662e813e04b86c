#pragma once

#include <array>
#include <bitset>
#include <cstdint>

#include "ccipher/bytes.hpp"

namespace ccipher {

inline constexpr int kStreamModulus = 127;
inline constexpr int kPrintableFirst = 33;
inline constexpr int kPrintableLast = 126;

// State of the keyed stream that fills the printable range of the table.
// 0..32 start out visited, so the stream only ever emits 33..126.
struct RandomState {
    int accumulator = 0;                  // running congruential sum
    int prev_raw = 0;                     // previous pre-probe value
    std::bitset<kStreamModulus> visited;  // values already emitted (or reserved)
    RandomState();
};

// Emits the next unused printable value. The accumulator advances from the
// previous pre-probe value, not from what was emitted; collision probing
// walks circularly and affects only the emitted value. The pre-probe
// sequence is therefore n * (3 * ckey1 mod 127) mod 127 for call n = 1, 2, ...
std::uint8_t next_random(RandomState& state, int ckey1_residue);

struct SubstitutionTable {
    std::array<std::uint8_t, 256> forward{};
    std::array<std::uint8_t, 256> inverse{};
};

// Identity on 0..32 and 127..255; keys 33..126 take successive stream values
// in ascending key order, which yields a permutation of 33..126.
SubstitutionTable build_tables(int ckey1_residue);

Bytes substitute(const SubstitutionTable& table, const Bytes& text);
Bytes unsubstitute(const SubstitutionTable& table, const Bytes& text);

}  // namespace ccipher
