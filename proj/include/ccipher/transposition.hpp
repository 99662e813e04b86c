#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccipher/bytes.hpp"

namespace ccipher {

// Column read order. order()[0] is the first column read out; values are
// 1-based column indices and must form a permutation of 1..N.
class ColumnKey {
public:
    explicit ColumnKey(std::vector<int> order);

    int width() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

private:
    std::vector<int> order_;
};

// Writes the text row-major into an N-column grid and reads columns out in
// key order, top to bottom. With a pad byte the text is first extended to a
// full rectangle; without one the grid is ragged and short columns simply
// contribute fewer bytes, so output length always equals input length.
Bytes transpose(const Bytes& text, const ColumnKey& key,
                std::optional<std::uint8_t> pad = std::nullopt);

// Exact inverse. In ragged mode column lengths are recomputed from the text
// length; in padded mode the length must be a multiple of the key width.
Bytes inverse_transpose(const Bytes& text, const ColumnKey& key,
                        std::optional<std::uint8_t> pad = std::nullopt);

}  // namespace ccipher
