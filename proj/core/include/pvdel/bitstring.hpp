#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pvdel {

/// Fixed-width string of bits, packed MSB-first into bytes.
///
/// Bit 0 is the leftmost bit of to_string() and the most significant bit of
/// the first byte. Padding bits in the last byte are always zero, so equal
/// widths compare lexicographically as raw bytes. Width 0 is a valid value
/// (the empty string).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t width) : bytes_((width + 7) / 8, 0), width_(width) {}

    /// Parse "0101..." text.
    static BitString from_string(std::string_view bits);
    /// Parse lowercase/uppercase hex of the packed bytes; padding must be zero.
    static BitString from_hex(std::string_view hex, std::size_t width);
    static BitString from_bytes(std::vector<std::uint8_t> bytes, std::size_t width);
    static BitString ones(std::size_t width);

    std::size_t size() const { return width_; }
    bool empty() const { return width_ == 0; }

    bool bit(std::size_t i) const;
    void set_bit(std::size_t i, bool v);

    /// XOR of all bits; 0 for the empty string.
    bool parity() const;
    std::size_t count() const;

    BitString slice(std::size_t offset, std::size_t width) const;
    void splice(std::size_t offset, const BitString& part);
    BitString concat(const BitString& other) const;
    BitString operator^(const BitString& other) const;
    /// Flip every bit.
    BitString flipped() const;

    /// Value as an unsigned integer, bit 0 most significant. Width must be <= 64.
    std::uint64_t to_uint() const;
    static BitString from_uint(std::uint64_t value, std::size_t width);

    std::string to_string() const;
    std::string to_hex() const;
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    /// Orders by width, then by packed bytes (== bitwise lexicographic for
    /// equal widths). Used as the canonical label order everywhere.
    std::strong_ordering operator<=>(const BitString& other) const;
    bool operator==(const BitString& other) const {
        return width_ == other.width_ && bytes_ == other.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t width_ = 0;
};

/// XOR of x_i over positions where mask_i = 1; widths must match.
bool masked_parity(const BitString& x, const BitString& mask);

} // namespace pvdel
