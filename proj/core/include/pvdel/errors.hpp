#pragma once

#include <stdexcept>
#include <string>

namespace pvdel {

/// Base class for all library-defined failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed file, wire bytes, or encoded value.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (state support, density dimension) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The base scheme failed to decrypt (wrong key, corrupted ciphertext body).
class DecryptError : public Error {
public:
    using Error::Error;
};

/// The decrypted payload does not parse as (sigk, theta, beta).
/// Kept distinct from DecryptError so callers can tell the two stages apart.
class PayloadError : public FormatError {
public:
    using FormatError::FormatError;
};

} // namespace pvdel
