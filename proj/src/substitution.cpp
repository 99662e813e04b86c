#include "ccipher/substitution.hpp"

#include <stdexcept>

#include "ccipher/errors.hpp"

namespace ccipher {

RandomState::RandomState() {
    for (std::size_t v = 0; v < static_cast<std::size_t>(kPrintableFirst); ++v) visited.set(v);
}

std::uint8_t next_random(RandomState& state, int ckey1_residue) {
    if (state.visited.all())
        throw TableExhaustedError("substitution stream exhausted after 94 values");

    state.accumulator = state.prev_raw + 3 * ckey1_residue;
    const int raw = state.accumulator % kStreamModulus;

    // probe circularly for the first unused value; terminates because at
    // least one of the 127 slots is still free here
    int value = raw;
    while (state.visited.test(static_cast<std::size_t>(value)))
        value = (value + 1) % kStreamModulus;

    state.visited.set(static_cast<std::size_t>(value));
    state.prev_raw = raw;  // the probe does not feed back into the stream
    return static_cast<std::uint8_t>(value);
}

SubstitutionTable build_tables(int ckey1_residue) {
    if (ckey1_residue < 0 || ckey1_residue >= kStreamModulus)
        throw std::invalid_argument("ckey1 residue must lie in 0..126");

    SubstitutionTable table;
    for (int b = 0; b < 256; ++b) table.forward[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(b);

    RandomState state;
    for (int b = kPrintableFirst; b <= kPrintableLast; ++b)
        table.forward[static_cast<std::size_t>(b)] = next_random(state, ckey1_residue);

    for (int b = 0; b < 256; ++b)
        table.inverse[table.forward[static_cast<std::size_t>(b)]] = static_cast<std::uint8_t>(b);
    return table;
}

Bytes substitute(const SubstitutionTable& table, const Bytes& text) {
    Bytes out;
    out.reserve(text.size());
    for (std::uint8_t b : text) out.push_back(table.forward[b]);
    return out;
}

Bytes unsubstitute(const SubstitutionTable& table, const Bytes& text) {
    Bytes out;
    out.reserve(text.size());
    for (std::uint8_t b : text) out.push_back(table.inverse[b]);
    return out;
}

}  // namespace ccipher
