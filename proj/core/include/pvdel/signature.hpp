#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "pvdel/bitstring.hpp"
#include "pvdel/owf.hpp"
#include "pvdel/rng.hpp"
#include "pvdel/state.hpp"

namespace pvdel {

/// Parameters of the one-time signature: message length, per-position
/// preimage/image widths, and the backing hardness assumption by name.
///
/// Backends: "sha256", "identity", "planted-sha256", "planted-identity".
/// The planted variants run the same key structure over instance-witness
/// pairs instead of image-preimage pairs.
struct SigParams {
    std::size_t message_bits = 0;   // paper's ell; equals lambda in the scheme
    std::size_t preimage_bits = 0;  // witness width
    std::size_t image_bits = 0;     // instance width
    std::string backend = "sha256";

    std::size_t signature_bits() const { return message_bits * preimage_bits; }
    std::size_t signing_key_bits() const { return 2 * message_bits * preimage_bits; }
    std::size_t verification_key_bits() const { return 2 * message_bits * image_bits; }

    static SigParams make(std::size_t message_bits, std::string backend = "sha256",
                          std::size_t preimage_bits = 128);
    void validate() const;
    bool operator==(const SigParams&) const = default;
};

std::vector<std::string> sig_backend_names();

/// Resolved backend: the planted problem plus, when OWF-derived, the
/// underlying function (whose invert hook powers negative-control forgers).
struct SigBackend {
    PlantedProblem problem;
    OwfSpec owf;  // eval always set; invert only for invertible toys
};

SigBackend resolve_sig_backend(const SigParams& params);
/// Backend with cached evaluations, for enumeration-heavy oracles.
SigBackend resolve_sig_backend_memoized(const SigParams& params);

struct SigningKey {
    SigParams params;
    std::vector<std::array<BitString, 2>> preimages;  // [i][b]

    /// Fixed-width concatenation, i ascending, b=0 then b=1.
    BitString to_bits() const;
    static SigningKey from_bits(const SigParams& params, const BitString& bits);
};

struct VerificationKey {
    SigParams params;
    std::vector<std::array<BitString, 2>> images;

    BitString to_bits() const;
    static VerificationKey from_bits(const SigParams& params, const BitString& bits);
};

struct Signature {
    std::vector<BitString> chunks;  // ell entries of preimage width

    BitString to_bits() const;
    static Signature from_bits(const SigParams& params, const BitString& bits);
    bool operator==(const Signature&) const = default;
};

struct SigKeyPair {
    VerificationKey vk;
    SigningKey sigk;
};

/// Key generation: for every position and bit, a sampled (image, preimage)
/// pair from the backend. Deterministic given (params, rng seed).
SigKeyPair sig_gen(const SigParams& params, Rng& rng);

/// sigma_i = u_{i, m_i}; deterministic, as the coherent-signing unitary needs.
Signature sig_sign(const SigningKey& sigk, const BitString& m);
/// Flat signature_bits() view of sig_sign, usable as a reversible function.
BitString sig_sign_bits(const SigningKey& sigk, const BitString& m);

/// Accepts iff v_{i, m_i} = f(w_i) for every position (relation check in
/// planted mode).
bool sig_vrfy(const VerificationKey& vk, const BitString& m, const Signature& sigma);
/// Same check with an explicitly resolved backend (e.g. a memoized one).
bool sig_vrfy_with(const SigBackend& backend, const VerificationKey& vk, const BitString& m,
                   const Signature& sigma);

inline constexpr const char* kMsgRegister = "MSG";
inline constexpr const char* kSigRegister = "SIG";

/// |m>|t> -> |m>|t xor Sign(sigk, m)> on the MSG/SIG registers. Self-inverse.
SparseState coherent_sign(const SigningKey& sigk, const SparseState& state);
SparseState coherent_unsign(const SigningKey& sigk, const SparseState& state);

} // namespace pvdel
