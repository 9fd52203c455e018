#pragma once

#include <cstdint>
#include <vector>

#include "pvdel/bitstring.hpp"
#include "pvdel/signature.hpp"

namespace pvdel {

using Bytes = std::vector<std::uint8_t>;

struct Payload {
    SigningKey sigk;
    BitString theta;
    int beta = 0;
};

/// Canonical encoding of the compiler's payload: sigk bits, then theta bits,
/// then beta as one byte in {0,1}, zero-padded to a byte boundary.
Bytes encode_payload(const SigningKey& sigk, const BitString& theta, int beta);

/// Inverse of encode_payload; widths come from (params, lambda).
Payload decode_payload(const SigParams& params, std::size_t lambda, const Bytes& bytes);

std::size_t encoded_payload_size(const SigParams& params, std::size_t lambda);

} // namespace pvdel
