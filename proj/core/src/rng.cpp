#include "pvdel/rng.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "pvdel/errors.hpp"

namespace pvdel {

namespace {

constexpr std::array<std::uint8_t, 12> kStreamNonce = {'s', 't', 'r', 'e', 'a', 'm',
                                                       0,   0,   0,   0,   0,   0};
constexpr std::array<std::uint8_t, 12> kDerivePrefix = {'d', 'e', 'r', 'i'};

inline std::uint32_t load_le32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline void store_le32(std::uint8_t* p, std::uint32_t v) {
    p[0] = static_cast<std::uint8_t>(v);
    p[1] = static_cast<std::uint8_t>(v >> 8);
    p[2] = static_cast<std::uint8_t>(v >> 16);
    p[3] = static_cast<std::uint8_t>(v >> 24);
}

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
    a += b; d ^= a; d = std::rotl(d, 16);
    c += d; b ^= c; b = std::rotl(b, 12);
    a += b; d ^= a; d = std::rotl(d, 8);
    c += d; b ^= c; b = std::rotl(b, 7);
}

} // namespace

std::array<std::uint8_t, 64> chacha20_block(const std::array<std::uint8_t, 32>& key,
                                            std::uint32_t counter,
                                            const std::array<std::uint8_t, 12>& nonce) {
    std::array<std::uint32_t, 16> state{};
    state[0] = 0x61707865;
    state[1] = 0x3320646e;
    state[2] = 0x79622d32;
    state[3] = 0x6b206574;
    for (int i = 0; i < 8; ++i) state[4 + i] = load_le32(key.data() + 4 * i);
    state[12] = counter;
    for (int i = 0; i < 3; ++i) state[13 + i] = load_le32(nonce.data() + 4 * i);

    std::array<std::uint32_t, 16> w = state;
    for (int round = 0; round < 10; ++round) {
        quarter_round(w[0], w[4], w[8], w[12]);
        quarter_round(w[1], w[5], w[9], w[13]);
        quarter_round(w[2], w[6], w[10], w[14]);
        quarter_round(w[3], w[7], w[11], w[15]);
        quarter_round(w[0], w[5], w[10], w[15]);
        quarter_round(w[1], w[6], w[11], w[12]);
        quarter_round(w[2], w[7], w[8], w[13]);
        quarter_round(w[3], w[4], w[9], w[14]);
    }
    std::array<std::uint8_t, 64> out{};
    for (int i = 0; i < 16; ++i) store_le32(out.data() + 4 * i, w[i] + state[i]);
    return out;
}

Rng::Rng(const Seed& seed) : seed_(seed) {}

Rng Rng::from_hex(std::string_view hex) {
    return Rng(seed_from_hex(hex));
}

Rng::Seed Rng::seed_from_hex(std::string_view hex) {
    if (hex.size() != 2 * seed_size) throw FormatError("seed must be 64 hex characters");
    const BitString bits = BitString::from_hex(hex, 8 * seed_size);
    Seed seed{};
    std::memcpy(seed.data(), bits.bytes().data(), seed_size);
    return seed;
}

Rng Rng::derive(std::uint64_t index) const {
    std::array<std::uint8_t, 12> nonce = kDerivePrefix;
    for (int i = 0; i < 8; ++i) {
        nonce[4 + i] = static_cast<std::uint8_t>(index >> (56 - 8 * i));
    }
    const auto block = chacha20_block(seed_, 0, nonce);
    Seed child{};
    std::memcpy(child.data(), block.data(), seed_size);
    return Rng(child);
}

void Rng::refill() {
    block_ = chacha20_block(seed_, counter_++, kStreamNonce);
    pos_ = 0;
}

std::uint32_t Rng::next_u32() {
    if (pos_ + 4 > block_.size()) refill();
    std::uint32_t v = load_le32(block_.data() + pos_);
    pos_ += 4;
    return v;
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::coin() {
    return (next_u32() & 1u) != 0;
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    if (n == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

BitString Rng::bits(std::size_t width) {
    auto raw = bytes((width + 7) / 8);
    if (width % 8 != 0 && !raw.empty()) {
        raw.back() &= static_cast<std::uint8_t>(0xFF << (8 - width % 8));
    }
    return BitString::from_bytes(std::move(raw), width);
}

std::vector<std::uint8_t> Rng::bytes(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (pos_ >= block_.size()) refill();
        out[i] = block_[pos_++];
    }
    return out;
}

std::string Rng::seed_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * seed_size);
    for (std::uint8_t b : seed_) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0F]);
    }
    return s;
}

} // namespace pvdel
