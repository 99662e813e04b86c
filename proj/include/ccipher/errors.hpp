#pragma once

#include <stdexcept>

namespace ccipher {

struct CipherError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Empty or otherwise unusable key material.
struct InvalidKeyError : CipherError {
    using CipherError::CipherError;
};

// Input bytes violate a format the operation requires.
struct MalformedInputError : CipherError {
    using CipherError::CipherError;
};

// Text carries no alphabetic content to analyze.
struct NotAttackableError : CipherError {
    using CipherError::CipherError;
};

// The substitution stream has already issued all 94 printable values.
struct TableExhaustedError : CipherError {
    using CipherError::CipherError;
};

}  // namespace ccipher
