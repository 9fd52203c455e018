#include "pvdel/payload.hpp"

#include <stdexcept>

#include "pvdel/errors.hpp"

namespace pvdel {

std::size_t encoded_payload_size(const SigParams& params, std::size_t lambda) {
    return (params.signing_key_bits() + lambda + 8 + 7) / 8;
}

Bytes encode_payload(const SigningKey& sigk, const BitString& theta, int beta) {
    if (beta != 0 && beta != 1) throw std::invalid_argument("beta must be 0 or 1");
    const BitString key_bits = sigk.to_bits();
    if (key_bits.size() != sigk.params.signing_key_bits()) {
        throw std::invalid_argument("signing key width does not match its parameters");
    }
    BitString beta_byte(8);
    beta_byte.set_bit(7, beta == 1);

    const BitString stream = key_bits.concat(theta).concat(beta_byte);
    return stream.bytes();
}

Payload decode_payload(const SigParams& params, std::size_t lambda, const Bytes& bytes) {
    const std::size_t expected = encoded_payload_size(params, lambda);
    if (bytes.size() != expected) {
        throw PayloadError("payload length " + std::to_string(bytes.size()) + " != expected " +
                           std::to_string(expected));
    }
    const std::size_t stream_bits = params.signing_key_bits() + lambda + 8;
    BitString stream(0);
    try {
        stream = BitString::from_bytes(bytes, stream_bits);
    } catch (const FormatError& e) {
        throw PayloadError(e.what());
    }

    const BitString beta_bits = stream.slice(params.signing_key_bits() + lambda, 8);
    const std::uint64_t beta_byte = beta_bits.to_uint();
    if (beta_byte > 1) throw PayloadError("beta byte is not 0 or 1");

    Payload payload;
    payload.sigk = SigningKey::from_bits(params, stream.slice(0, params.signing_key_bits()));
    payload.theta = stream.slice(params.signing_key_bits(), lambda);
    payload.beta = static_cast<int>(beta_byte);
    return payload;
}

} // namespace pvdel
