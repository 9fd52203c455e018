#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvdel/payload.hpp"
#include "pvdel/rng.hpp"

namespace pvdel {

/// Pluggable base encryption for the compiler. Symmetric instantiations
/// return pk == sk. User-supplied PKE plugs in through register_base_scheme.
class BaseScheme {
public:
    virtual ~BaseScheme() = default;

    virtual std::string tag() const = 0;
    virtual std::uint8_t tag_byte() const = 0;
    virtual std::pair<Bytes, Bytes> gen(std::size_t lambda, Rng& rng) const = 0;  // (pk, sk)
    virtual Bytes enc(const Bytes& pk, const Bytes& payload, Rng& rng) const = 0;
    /// nullopt on decryption failure (wrong key / corrupted body); malformed
    /// ciphertext framing throws FormatError instead.
    virtual std::optional<Bytes> dec(const Bytes& sk, const Bytes& ct) const = 0;
};

/// Correctness-grade SKE: SHA-256 keystream XOR with a hash MAC. The SKE
/// instantiation of the compiler's generic base; pk == sk == key.
std::shared_ptr<BaseScheme> make_ske_hash();

/// Test double whose ciphertext is a constant function of the payload and
/// whose dec consults a hidden single-slot table. Perfectly hiding by
/// construction; only meaningful inside the everlasting oracle and tests.
std::shared_ptr<BaseScheme> make_ideal_base();

std::shared_ptr<BaseScheme> make_base_scheme(const std::string& tag);
std::vector<std::string> base_scheme_names();
/// Install a user-supplied scheme under its tag().
void register_base_scheme(std::shared_ptr<BaseScheme> scheme);

} // namespace pvdel
