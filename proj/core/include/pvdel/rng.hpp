#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pvdel/bitstring.hpp"

namespace pvdel {

/// Deterministic random stream: ChaCha20 keystream (RFC 8439 block function)
/// keyed by a 256-bit seed. Identical seeds give identical streams on every
/// platform; every random choice in the library flows through this type.
///
/// Independent child streams come from derive(), which re-keys with a block
/// computed under a reserved nonce, so parent and child streams never overlap.
class Rng {
public:
    static constexpr std::size_t seed_size = 32;
    using Seed = std::array<std::uint8_t, seed_size>;

    explicit Rng(const Seed& seed);
    /// 64 hex characters.
    static Rng from_hex(std::string_view hex);
    static Seed seed_from_hex(std::string_view hex);

    /// Child stream for an independent trial or subtask.
    Rng derive(std::uint64_t index) const;

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    bool coin();
    /// Uniform in [0, n), unbiased (rejection sampling); n >= 1.
    std::uint64_t below(std::uint64_t n);
    BitString bits(std::size_t width);
    std::vector<std::uint8_t> bytes(std::size_t n);

    const Seed& seed() const { return seed_; }
    std::string seed_hex() const;

private:
    void refill();

    Seed seed_{};
    std::array<std::uint8_t, 64> block_{};
    std::size_t pos_ = 64;
    std::uint32_t counter_ = 0;
};

/// RFC 8439 ChaCha20 block function: 32-byte key, 32-bit block counter,
/// 12-byte nonce -> 64 keystream bytes. Exposed for known-answer tests.
std::array<std::uint8_t, 64> chacha20_block(const std::array<std::uint8_t, 32>& key,
                                            std::uint32_t counter,
                                            const std::array<std::uint8_t, 12>& nonce);

} // namespace pvdel
