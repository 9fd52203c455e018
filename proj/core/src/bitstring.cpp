#include "pvdel/bitstring.hpp"

#include <bit>
#include <stdexcept>

#include "pvdel/errors.hpp"

namespace pvdel {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

BitString BitString::from_string(std::string_view bits) {
    BitString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            out.set_bit(i, true);
        } else if (bits[i] != '0') {
            throw FormatError("bit string contains a character other than 0/1");
        }
    }
    return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t width) {
    const std::size_t nbytes = (width + 7) / 8;
    if (hex.size() != 2 * nbytes) {
        throw FormatError("hex string length does not match bit width");
    }
    std::vector<std::uint8_t> bytes(nbytes, 0);
    for (std::size_t i = 0; i < nbytes; ++i) {
        const int hi = hex_digit(hex[2 * i]);
        const int lo = hex_digit(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw FormatError("invalid hex digit");
        bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return from_bytes(std::move(bytes), width);
}

BitString BitString::from_bytes(std::vector<std::uint8_t> bytes, std::size_t width) {
    if (bytes.size() != (width + 7) / 8) {
        throw FormatError("byte buffer length does not match bit width");
    }
    if (width % 8 != 0 && !bytes.empty()) {
        const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFF >> (width % 8));
        if ((bytes.back() & pad_mask) != 0) {
            throw FormatError("padding bits beyond the declared width must be zero");
        }
    }
    BitString out;
    out.bytes_ = std::move(bytes);
    out.width_ = width;
    return out;
}

BitString BitString::ones(std::size_t width) {
    BitString out(width);
    for (std::size_t i = 0; i < width; ++i) out.set_bit(i, true);
    return out;
}

bool BitString::bit(std::size_t i) const {
    if (i >= width_) throw std::invalid_argument("bit index out of range");
    return (bytes_[i / 8] >> (7 - i % 8)) & 1;
}

void BitString::set_bit(std::size_t i, bool v) {
    if (i >= width_) throw std::invalid_argument("bit index out of range");
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - i % 8));
    if (v) {
        bytes_[i / 8] |= mask;
    } else {
        bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
    }
}

bool BitString::parity() const {
    std::uint8_t acc = 0;
    for (std::uint8_t b : bytes_) acc ^= b;
    return std::popcount(acc) % 2 != 0;
}

std::size_t BitString::count() const {
    std::size_t n = 0;
    for (std::uint8_t b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
}

BitString BitString::slice(std::size_t offset, std::size_t width) const {
    if (offset + width > width_) throw std::invalid_argument("slice out of range");
    if (offset % 8 == 0) {
        const std::size_t first = offset / 8;
        std::vector<std::uint8_t> bytes(bytes_.begin() + first,
                                        bytes_.begin() + first + (width + 7) / 8);
        if (width % 8 != 0 && !bytes.empty()) {
            bytes.back() &= static_cast<std::uint8_t>(0xFF << (8 - width % 8));
        }
        BitString out;
        out.bytes_ = std::move(bytes);
        out.width_ = width;
        return out;
    }
    BitString out(width);
    for (std::size_t i = 0; i < width; ++i) out.set_bit(i, bit(offset + i));
    return out;
}

void BitString::splice(std::size_t offset, const BitString& part) {
    if (offset + part.size() > width_) throw std::invalid_argument("splice out of range");
    if (part.size() == 0) return;
    if (offset % 8 == 0) {
        const std::size_t first = offset / 8;
        const std::size_t whole = part.size() / 8;
        std::copy(part.bytes_.begin(), part.bytes_.begin() + whole, bytes_.begin() + first);
        for (std::size_t i = 8 * whole; i < part.size(); ++i) set_bit(offset + i, part.bit(i));
        return;
    }
    for (std::size_t i = 0; i < part.size(); ++i) set_bit(offset + i, part.bit(i));
}

BitString BitString::concat(const BitString& other) const {
    if (width_ % 8 == 0) {
        std::vector<std::uint8_t> bytes = bytes_;
        bytes.insert(bytes.end(), other.bytes_.begin(), other.bytes_.end());
        BitString out;
        out.bytes_ = std::move(bytes);
        out.width_ = width_ + other.width_;
        return out;
    }
    BitString out(width_ + other.width_);
    out.splice(0, *this);
    out.splice(width_, other);
    return out;
}

BitString BitString::operator^(const BitString& other) const {
    if (width_ != other.width_) throw std::invalid_argument("xor width mismatch");
    BitString out = *this;
    for (std::size_t i = 0; i < bytes_.size(); ++i) out.bytes_[i] ^= other.bytes_[i];
    return out;
}

BitString BitString::flipped() const {
    BitString out = *this;
    for (auto& b : out.bytes_) b = static_cast<std::uint8_t>(~b);
    if (width_ % 8 != 0 && !out.bytes_.empty()) {
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - width_ % 8));
    }
    return out;
}

std::uint64_t BitString::to_uint() const {
    if (width_ > 64) throw std::invalid_argument("to_uint requires width <= 64");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width_; ++i) v = (v << 1) | (bit(i) ? 1u : 0u);
    return v;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width) {
    if (width > 64) throw std::invalid_argument("from_uint requires width <= 64");
    BitString out(width);
    for (std::size_t i = 0; i < width; ++i) {
        out.set_bit(width - 1 - i, (value >> i) & 1);
    }
    return out;
}

std::string BitString::to_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if (bit(i)) s[i] = '1';
    }
    return s;
}

std::string BitString::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * bytes_.size());
    for (std::uint8_t b : bytes_) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0F]);
    }
    return s;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
    if (auto c = width_ <=> other.width_; c != 0) return c;
    return bytes_ <=> other.bytes_;
}

bool masked_parity(const BitString& x, const BitString& mask) {
    if (x.size() != mask.size()) throw std::invalid_argument("masked_parity width mismatch");
    std::uint8_t acc = 0;
    const auto& xb = x.bytes();
    const auto& mb = mask.bytes();
    for (std::size_t i = 0; i < xb.size(); ++i) acc ^= static_cast<std::uint8_t>(xb[i] & mb[i]);
    return std::popcount(acc) % 2 != 0;
}

} // namespace pvdel
