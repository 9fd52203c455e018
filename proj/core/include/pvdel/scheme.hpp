#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pvdel/base.hpp"
#include "pvdel/bitstring.hpp"
#include "pvdel/payload.hpp"
#include "pvdel/rng.hpp"
#include "pvdel/signature.hpp"
#include "pvdel/state.hpp"

namespace pvdel {

/// Parameters of the deletion-certifying encryption scheme: BB84 length,
/// signature parameters with message length lambda, and the base scheme tag.
struct PvdParams {
    std::size_t lambda = 16;
    SigParams sig;
    std::string base = "ske-hash";
    Limits limits;

    static PvdParams make(std::size_t lambda, std::string backend = "sha256",
                          std::size_t preimage_bits = 128, std::string base = "ske-hash");
    void validate() const;
    RegisterLayout cipher_layout() const;
};

/// The quantum part (signed BB84 state over MSG || SIG) plus the base
/// ciphertext of (sigk, theta, beta).
struct QCiphertext {
    SparseState psi;
    Bytes base_ct;
};

struct DeletionCertificate {
    BitString x_prime;
    Signature sigma_prime;
};

std::pair<Bytes, Bytes> pvd_gen(const PvdParams& params, Rng& rng);

/// Encrypt one bit: sample x, theta, signature keys; coherently sign the
/// BB84 state; encrypt (sigk, theta, m xor masked parity of x).
std::pair<VerificationKey, QCiphertext> pvd_enc(const PvdParams& params, const Bytes& pk, int m,
                                                Rng& rng);

/// Decrypt: base-decrypt the payload, uncompute the signature register,
/// measure MSG in the Hadamard basis, and unmask. Takes the ciphertext by
/// value: decryption consumes it.
int pvd_dec(const PvdParams& params, const Bytes& sk, QCiphertext ct, Rng& rng);

/// Delete: measure the whole quantum part in the computational basis. The
/// ciphertext is consumed; the certificate is all that remains.
DeletionCertificate pvd_del(const PvdParams& params, QCiphertext ct, Rng& rng);

/// Deletion that also returns the post-measurement state. Experiment harness
/// only; the production API never exposes the residual.
struct DeletionDebug {
    DeletionCertificate cert;
    SparseState post;
};
DeletionDebug pvd_del_debug(const PvdParams& params, QCiphertext ct, Rng& rng);

/// Public verification: a deterministic classical function of (vk, cert)
/// only. No secret, basis string, or randomness parameter exists.
bool pvd_vrfy(const VerificationKey& vk, const DeletionCertificate& cert);

/// Width checks for a certificate; lets callers tell a malformed certificate
/// apart from a rejected one.
bool cert_well_formed(const SigParams& params, const DeletionCertificate& cert);

/// Multi-bit wrappers: one independent single-bit instance per message bit.
std::pair<std::vector<VerificationKey>, std::vector<QCiphertext>> pvd_enc_str(
    const PvdParams& params, const Bytes& pk, const BitString& msg, Rng& rng);
BitString pvd_dec_str(const PvdParams& params, const Bytes& sk, std::vector<QCiphertext> cts,
                      Rng& rng);
std::vector<DeletionCertificate> pvd_del_str(const PvdParams& params,
                                             std::vector<QCiphertext> cts, Rng& rng);
bool pvd_vrfy_str(const std::vector<VerificationKey>& vks,
                  const std::vector<DeletionCertificate>& certs);

/// True iff every support label of the quantum part carries Sign(sigk, msg)
/// on its SIG register.
bool is_honestly_signed(const QCiphertext& ct, const SigningKey& sigk);

namespace detail {

/// The signed BB84 state U_sign (|x>_theta tensor |0...0>).
SparseState signed_bb84(const SigningKey& sigk, const BitString& x, const BitString& theta);

/// Encryption with every random choice supplied by the caller; pvd_enc and
/// the game harnesses are thin wrappers over this.
std::pair<VerificationKey, QCiphertext> pvd_enc_with(const PvdParams& params,
                                                     const BaseScheme& base, const Bytes& pk,
                                                     int m, const BitString& x,
                                                     const BitString& theta,
                                                     const SigKeyPair& keys, Rng& enc_rng);

} // namespace detail

} // namespace pvdel
