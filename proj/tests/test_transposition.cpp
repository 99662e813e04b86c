#include <doctest.h>

#include <algorithm>
#include <random>

#include "ccipher/errors.hpp"
#include "ccipher/transposition.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using ccipher::Bytes;
using ccipher::ColumnKey;
using ccipher::inverse_transpose;
using ccipher::to_bytes;
using ccipher::to_string;
using ccipher::transpose;

TEST_CASE("padded classic example") {
    const ColumnKey key(fixtures::kColumnarOrder);
    const Bytes plain = to_bytes(fixtures::kColumnarPlain);

    const Bytes expected = oracles::grid_transpose(plain, fixtures::kColumnarOrder, 'z');
    CHECK(to_string(expected) == fixtures::kColumnarCipher);

    const Bytes cipher = transpose(plain, key, 'z');
    CHECK(cipher == expected);
    // inverse keeps the pad byte
    CHECK(to_string(inverse_transpose(cipher, key, 'z')) == fixtures::kColumnarPlain + "z");
}

TEST_CASE("ragged known-answer stage") {
    const ColumnKey key({4, 5, 2, 1, 3});
    const Bytes stage = to_bytes(fixtures::kStageSubstituted);

    const Bytes pass1 = transpose(stage, key);
    CHECK(to_string(pass1) == fixtures::kStagePass1);
    CHECK(pass1 == oracles::grid_transpose(stage, key.order(), -1));
    CHECK(inverse_transpose(pass1, key) == stage);

    const Bytes pass2 = transpose(pass1, key);
    CHECK(to_string(pass2) == fixtures::kStageFinal);
}

TEST_CASE("single column is the identity") {
    const ColumnKey key({1});
    const Bytes text = to_bytes("any text at all");
    CHECK(transpose(text, key) == text);
    CHECK(transpose(text, key, 'z') == text);
    CHECK(inverse_transpose(text, key) == text);
}

TEST_CASE("empty input stays empty") {
    const ColumnKey key({3, 1, 2});
    CHECK(transpose({}, key).empty());
    CHECK(transpose({}, key, 'z').empty());
    CHECK(inverse_transpose({}, key).empty());
    CHECK(inverse_transpose({}, key, 'z').empty());
}

TEST_CASE("column key validation") {
    CHECK_THROWS_AS(ColumnKey({}), ccipher::InvalidKeyError);
    CHECK_THROWS_AS(ColumnKey({1, 1}), ccipher::InvalidKeyError);
    CHECK_THROWS_AS(ColumnKey({2}), ccipher::InvalidKeyError);
    CHECK_THROWS_AS(ColumnKey({0, 1}), ccipher::InvalidKeyError);
    CHECK_THROWS_AS(ColumnKey({1, 3}), ccipher::InvalidKeyError);
}

TEST_CASE("padded inverse rejects lengths off the rectangle") {
    const ColumnKey key({2, 1, 3});
    CHECK_THROWS_AS(inverse_transpose(to_bytes("abcd"), key, 'z'),
                    ccipher::MalformedInputError);
}

TEST_CASE("ragged round trip over random texts and widths") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 16)(rng);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        const ColumnKey key(order);

        Bytes text(std::uniform_int_distribution<std::size_t>(0, 1000)(rng));
        for (auto& b : text) b = static_cast<std::uint8_t>(byte_dist(rng));

        const Bytes cipher = transpose(text, key);
        CHECK(cipher.size() == text.size());
        // rearrangement only
        Bytes sorted_in = text, sorted_out = cipher;
        std::sort(sorted_in.begin(), sorted_in.end());
        std::sort(sorted_out.begin(), sorted_out.end());
        CHECK(sorted_in == sorted_out);

        CHECK(inverse_transpose(cipher, key) == text);
    }
}

TEST_CASE("identity order reads columns by the index formula") {
    const int n = 4;
    const ColumnKey key({1, 2, 3, 4});
    Bytes text;
    for (int i = 0; i < 6 * n; ++i) text.push_back(static_cast<std::uint8_t>(i));
    const Bytes out = transpose(text, key);
    const int rows = 6;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < rows; ++r)
            CHECK(out[static_cast<std::size_t>(c * rows + r)] ==
                  text[static_cast<std::size_t>(r * n + c)]);
}

TEST_CASE("agrees with the literal grid oracle in both modes") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        const ColumnKey key(order);
        for (std::size_t len : {0u, 1u, 7u, 40u, 199u, 200u}) {
            Bytes text(len);
            for (auto& b : text) b = static_cast<std::uint8_t>(byte_dist(rng));

            CHECK(transpose(text, key) == oracles::grid_transpose(text, order, -1));
            CHECK(transpose(text, key, 'x') == oracles::grid_transpose(text, order, 'x'));
            CHECK(inverse_transpose(oracles::grid_transpose(text, order, -1), key) == text);
        }
    }
}
