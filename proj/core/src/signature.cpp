#include "pvdel/signature.hpp"

#include <stdexcept>

namespace pvdel {

SigParams SigParams::make(std::size_t message_bits, std::string backend,
                          std::size_t preimage_bits) {
    SigParams p;
    p.message_bits = message_bits;
    p.preimage_bits = preimage_bits;
    p.image_bits = preimage_bits;
    p.backend = std::move(backend);
    p.validate();
    return p;
}

void SigParams::validate() const {
    if (message_bits == 0) throw std::invalid_argument("message length must be >= 1");
    if (preimage_bits == 0 || image_bits == 0) {
        throw std::invalid_argument("preimage/image widths must be >= 1");
    }
    resolve_sig_backend(*this);  // throws on unknown backend
}

std::vector<std::string> sig_backend_names() {
    return {"sha256", "identity", "planted-sha256", "planted-identity"};
}

namespace {

SigBackend backend_from_owf(OwfSpec owf) {
    SigBackend backend;
    backend.problem = planted_from_owf(owf);
    backend.owf = std::move(owf);
    return backend;
}

} // namespace

SigBackend resolve_sig_backend(const SigParams& params) {
    const std::string& name = params.backend;
    if (name == "sha256" || name == "planted-sha256") {
        if (params.image_bits > 256) {
            throw std::invalid_argument("sha256 backend caps image width at 256 bits");
        }
        return backend_from_owf(make_sha256_owf(params.preimage_bits, params.image_bits));
    }
    if (name == "identity" || name == "planted-identity") {
        if (params.image_bits != params.preimage_bits) {
            throw std::invalid_argument("identity backend needs equal widths");
        }
        return backend_from_owf(make_identity_owf(params.preimage_bits));
    }
    std::string known;
    for (const auto& n : sig_backend_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw std::invalid_argument("unknown signature backend '" + name + "' (known: " + known + ")");
}

SigBackend resolve_sig_backend_memoized(const SigParams& params) {
    SigBackend backend = resolve_sig_backend(params);
    backend.owf = memoized(std::move(backend.owf));
    backend.problem = planted_from_owf(backend.owf);
    return backend;
}

namespace {

BitString concat_pairs(const std::vector<std::array<BitString, 2>>& entries) {
    std::size_t total = 0;
    for (const auto& pair : entries) total += pair[0].size() + pair[1].size();
    BitString out(total);
    std::size_t off = 0;
    for (const auto& pair : entries) {
        out.splice(off, pair[0]);
        off += pair[0].size();
        out.splice(off, pair[1]);
        off += pair[1].size();
    }
    return out;
}

std::vector<std::array<BitString, 2>> split_pairs(const BitString& bits, std::size_t count,
                                                  std::size_t entry_bits) {
    if (bits.size() != 2 * count * entry_bits) {
        throw std::invalid_argument("key bit width does not match parameters");
    }
    std::vector<std::array<BitString, 2>> out(count);
    std::size_t off = 0;
    for (std::size_t i = 0; i < count; ++i) {
        out[i][0] = bits.slice(off, entry_bits);
        off += entry_bits;
        out[i][1] = bits.slice(off, entry_bits);
        off += entry_bits;
    }
    return out;
}

} // namespace

BitString SigningKey::to_bits() const {
    return concat_pairs(preimages);
}

SigningKey SigningKey::from_bits(const SigParams& params, const BitString& bits) {
    SigningKey key;
    key.params = params;
    key.preimages = split_pairs(bits, params.message_bits, params.preimage_bits);
    return key;
}

BitString VerificationKey::to_bits() const {
    return concat_pairs(images);
}

VerificationKey VerificationKey::from_bits(const SigParams& params, const BitString& bits) {
    VerificationKey key;
    key.params = params;
    key.images = split_pairs(bits, params.message_bits, params.image_bits);
    return key;
}

BitString Signature::to_bits() const {
    std::size_t total = 0;
    for (const auto& chunk : chunks) total += chunk.size();
    BitString out(total);
    std::size_t off = 0;
    for (const auto& chunk : chunks) {
        out.splice(off, chunk);
        off += chunk.size();
    }
    return out;
}

Signature Signature::from_bits(const SigParams& params, const BitString& bits) {
    if (bits.size() != params.signature_bits()) {
        throw std::invalid_argument("signature bit width does not match parameters");
    }
    Signature sigma;
    sigma.chunks.reserve(params.message_bits);
    for (std::size_t i = 0; i < params.message_bits; ++i) {
        sigma.chunks.push_back(bits.slice(i * params.preimage_bits, params.preimage_bits));
    }
    return sigma;
}

SigKeyPair sig_gen(const SigParams& params, Rng& rng) {
    params.validate();
    const SigBackend backend = resolve_sig_backend(params);

    SigKeyPair keys;
    keys.vk.params = params;
    keys.sigk.params = params;
    keys.vk.images.resize(params.message_bits);
    keys.sigk.preimages.resize(params.message_bits);
    for (std::size_t i = 0; i < params.message_bits; ++i) {
        for (int b = 0; b < 2; ++b) {
            auto [instance, witness] = backend.problem.sample(rng);
            keys.vk.images[i][b] = std::move(instance);
            keys.sigk.preimages[i][b] = std::move(witness);
        }
    }
    return keys;
}

Signature sig_sign(const SigningKey& sigk, const BitString& m) {
    if (m.size() != sigk.params.message_bits) {
        throw std::invalid_argument("message length does not match signing key");
    }
    Signature sigma;
    sigma.chunks.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        sigma.chunks.push_back(sigk.preimages[i][m.bit(i) ? 1 : 0]);
    }
    return sigma;
}

BitString sig_sign_bits(const SigningKey& sigk, const BitString& m) {
    return sig_sign(sigk, m).to_bits();
}

bool sig_vrfy_with(const SigBackend& backend, const VerificationKey& vk, const BitString& m,
                   const Signature& sigma) {
    if (m.size() != vk.params.message_bits || sigma.chunks.size() != vk.params.message_bits) {
        throw std::invalid_argument("message/signature length does not match verification key");
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (sigma.chunks[i].size() != vk.params.preimage_bits) {
            throw std::invalid_argument("signature chunk width mismatch");
        }
        const BitString& image = vk.images[i][m.bit(i) ? 1 : 0];
        if (!backend.problem.check(image, sigma.chunks[i])) return false;
    }
    return true;
}

bool sig_vrfy(const VerificationKey& vk, const BitString& m, const Signature& sigma) {
    return sig_vrfy_with(resolve_sig_backend(vk.params), vk, m, sigma);
}

SparseState coherent_sign(const SigningKey& sigk, const SparseState& state) {
    const auto& layout = state.layout();
    if (!layout.has(kMsgRegister) || !layout.has(kSigRegister) ||
        layout.at(kMsgRegister).width != sigk.params.message_bits ||
        layout.at(kSigRegister).width != sigk.params.signature_bits()) {
        throw std::invalid_argument("state layout does not match signing key");
    }
    return append_classical_function(state, kMsgRegister, kSigRegister,
                                     [&sigk](const BitString& m) {
                                         return sig_sign_bits(sigk, m);
                                     });
}

SparseState coherent_unsign(const SigningKey& sigk, const SparseState& state) {
    return coherent_sign(sigk, state);
}

} // namespace pvdel
