#pragma once

#include <string>
#include <vector>

#include "ccipher/bytes.hpp"

namespace ccipher {

// 1-based permutation values.
using Permutation = std::vector<int>;

// The two subkeys derived from a password of N bytes.
struct SubKeys {
    std::string ckey1_digits;  // full base-10 fold of the password bytes, for display
    int ckey1_residue = 0;     // the same value mod 127; drives the substitution stream
    Permutation ckey2;         // permutation of 1..N; the column read order
};

// out[i] = raw[i] when raw[i] is in 1..n and unused so far, otherwise the
// smallest unused value in 1..n. Total for every input; the result is always
// a permutation of 1..n.
Permutation dedupe_to_permutation(const std::vector<int>& raw, int n);

// ckey1 folds bytes with value*10 + byte; ckey2 starts from (byte mod 5) + 1
// per position and is deduplicated into a permutation.
SubKeys derive_subkeys(const Bytes& password);

}  // namespace ccipher
