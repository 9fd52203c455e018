#include "pvdel/base.hpp"

#include <cstring>
#include <map>
#include <stdexcept>

#include "pvdel/errors.hpp"
#include "pvdel/owf.hpp"

namespace pvdel {

namespace {

constexpr std::size_t kKeyBytes = 32;
constexpr std::size_t kNonceBytes = 16;
constexpr std::size_t kMacBytes = 16;

Bytes keystream(const Bytes& key, const Bytes& nonce, std::size_t len) {
    Bytes out;
    out.reserve(len);
    std::uint64_t block = 0;
    while (out.size() < len) {
        Bytes input;
        input.reserve(key.size() + nonce.size() + 8);
        input.insert(input.end(), key.begin(), key.end());
        input.insert(input.end(), nonce.begin(), nonce.end());
        for (int i = 7; i >= 0; --i) input.push_back(static_cast<std::uint8_t>(block >> (8 * i)));
        const auto digest = sha256(input);
        for (std::uint8_t b : digest) {
            if (out.size() == len) break;
            out.push_back(b);
        }
        ++block;
    }
    return out;
}

Bytes mac_tag(const Bytes& key, const Bytes& nonce, const Bytes& payload) {
    Bytes input;
    input.reserve(key.size() + 4 + nonce.size() + payload.size());
    input.insert(input.end(), key.begin(), key.end());
    const char* label = "mac.";
    input.insert(input.end(), label, label + 4);
    input.insert(input.end(), nonce.begin(), nonce.end());
    input.insert(input.end(), payload.begin(), payload.end());
    const auto digest = sha256(input);
    return Bytes(digest.begin(), digest.begin() + kMacBytes);
}

class SkeHash final : public BaseScheme {
public:
    std::string tag() const override { return "ske-hash"; }
    std::uint8_t tag_byte() const override { return 0x01; }

    std::pair<Bytes, Bytes> gen(std::size_t, Rng& rng) const override {
        Bytes key = rng.bytes(kKeyBytes);
        return {key, key};
    }

    Bytes enc(const Bytes& pk, const Bytes& payload, Rng& rng) const override {
        if (pk.size() != kKeyBytes) throw FormatError("ske-hash key must be 32 bytes");
        if (payload.empty()) throw FormatError("empty payload rejected");
        const Bytes nonce = rng.bytes(kNonceBytes);
        const Bytes stream = keystream(pk, nonce, payload.size());
        Bytes ct;
        ct.reserve(kNonceBytes + payload.size() + kMacBytes);
        ct.insert(ct.end(), nonce.begin(), nonce.end());
        for (std::size_t i = 0; i < payload.size(); ++i) {
            ct.push_back(static_cast<std::uint8_t>(payload[i] ^ stream[i]));
        }
        const Bytes tag = mac_tag(pk, nonce, payload);
        ct.insert(ct.end(), tag.begin(), tag.end());
        return ct;
    }

    std::optional<Bytes> dec(const Bytes& sk, const Bytes& ct) const override {
        if (sk.size() != kKeyBytes) throw FormatError("ske-hash key must be 32 bytes");
        if (ct.size() < kNonceBytes + 1 + kMacBytes) {
            throw FormatError("ske-hash ciphertext too short");
        }
        const Bytes nonce(ct.begin(), ct.begin() + kNonceBytes);
        const std::size_t body_len = ct.size() - kNonceBytes - kMacBytes;
        const Bytes stream = keystream(sk, nonce, body_len);
        Bytes payload(body_len);
        for (std::size_t i = 0; i < body_len; ++i) {
            payload[i] = static_cast<std::uint8_t>(ct[kNonceBytes + i] ^ stream[i]);
        }
        const Bytes expected = mac_tag(sk, nonce, payload);
        const Bytes got(ct.end() - kMacBytes, ct.end());
        if (expected != got) return std::nullopt;
        return payload;
    }
};

class IdealBase final : public BaseScheme {
public:
    IdealBase() : table_(std::make_shared<std::optional<Bytes>>()) {}

    std::string tag() const override { return "ideal"; }
    std::uint8_t tag_byte() const override { return 0x7F; }

    std::pair<Bytes, Bytes> gen(std::size_t, Rng&) const override {
        return {Bytes{}, Bytes{}};
    }

    Bytes enc(const Bytes&, const Bytes& payload, Rng&) const override {
        if (payload.empty()) throw FormatError("empty payload rejected");
        if (table_->has_value() && **table_ != payload) {
            throw std::logic_error("ideal base is single-slot: second enc with a new payload");
        }
        *table_ = payload;
        return fixed_ciphertext();
    }

    std::optional<Bytes> dec(const Bytes&, const Bytes& ct) const override {
        if (ct != fixed_ciphertext()) throw FormatError("not an ideal-base ciphertext");
        if (!table_->has_value()) return std::nullopt;
        return **table_;
    }

    static Bytes fixed_ciphertext() { return Bytes(8, 0x00); }

private:
    std::shared_ptr<std::optional<Bytes>> table_;
};

std::map<std::string, std::shared_ptr<BaseScheme>>& user_registry() {
    static std::map<std::string, std::shared_ptr<BaseScheme>> registry;
    return registry;
}

} // namespace

std::shared_ptr<BaseScheme> make_ske_hash() {
    return std::make_shared<SkeHash>();
}

std::shared_ptr<BaseScheme> make_ideal_base() {
    return std::make_shared<IdealBase>();
}

std::shared_ptr<BaseScheme> make_base_scheme(const std::string& tag) {
    if (tag == "ske-hash") return make_ske_hash();
    if (tag == "ideal") return make_ideal_base();
    auto it = user_registry().find(tag);
    if (it != user_registry().end()) return it->second;
    std::string known;
    for (const auto& n : base_scheme_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw std::invalid_argument("unknown base scheme '" + tag + "' (known: " + known + ")");
}

std::vector<std::string> base_scheme_names() {
    std::vector<std::string> names = {"ske-hash", "ideal"};
    for (const auto& [tag, scheme] : user_registry()) names.push_back(tag);
    return names;
}

void register_base_scheme(std::shared_ptr<BaseScheme> scheme) {
    if (!scheme) throw std::invalid_argument("null base scheme");
    user_registry()[scheme->tag()] = std::move(scheme);
}

} // namespace pvdel
