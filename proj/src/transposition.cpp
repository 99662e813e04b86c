#include "ccipher/transposition.hpp"

#include "ccipher/errors.hpp"

namespace ccipher {

ColumnKey::ColumnKey(std::vector<int> order) : order_(std::move(order)) {
    if (order_.empty()) throw InvalidKeyError("column key must not be empty");
    std::vector<bool> seen(order_.size() + 1, false);
    for (int c : order_) {
        if (c < 1 || c > width() || seen[static_cast<std::size_t>(c)])
            throw InvalidKeyError("column key must be a permutation of 1..N");
        seen[static_cast<std::size_t>(c)] = true;
    }
}

namespace {

// entries in 1-based column c of an L-byte row-major grid N wide
std::size_t column_length(std::size_t text_len, std::size_t width, std::size_t column) {
    if (column > text_len) return 0;
    return (text_len - column) / width + 1;
}

}  // namespace

Bytes transpose(const Bytes& text, const ColumnKey& key, std::optional<std::uint8_t> pad) {
    const auto width = static_cast<std::size_t>(key.width());
    Bytes grid = text;
    if (pad && grid.size() % width != 0)
        grid.resize(grid.size() + (width - grid.size() % width), *pad);

    Bytes out;
    out.reserve(grid.size());
    for (int c : key.order())
        for (std::size_t i = static_cast<std::size_t>(c) - 1; i < grid.size(); i += width)
            out.push_back(grid[i]);
    return out;
}

Bytes inverse_transpose(const Bytes& text, const ColumnKey& key, std::optional<std::uint8_t> pad) {
    const auto width = static_cast<std::size_t>(key.width());
    if (pad && text.size() % width != 0)
        throw MalformedInputError("padded ciphertext length must be a multiple of the key width");

    Bytes out(text.size());
    std::size_t pos = 0;
    for (int c : key.order()) {
        const std::size_t len = column_length(text.size(), width, static_cast<std::size_t>(c));
        for (std::size_t row = 0; row < len; ++row)
            out[row * width + static_cast<std::size_t>(c) - 1] = text[pos++];
    }
    return out;
}

}  // namespace ccipher
