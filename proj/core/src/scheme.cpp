#include "pvdel/scheme.hpp"

#include <stdexcept>

#include "pvdel/errors.hpp"

namespace pvdel {

PvdParams PvdParams::make(std::size_t lambda, std::string backend, std::size_t preimage_bits,
                          std::string base) {
    PvdParams p;
    p.lambda = lambda;
    p.sig = SigParams::make(lambda, std::move(backend), preimage_bits);
    p.base = std::move(base);
    p.validate();
    return p;
}

void PvdParams::validate() const {
    if (lambda == 0) throw std::invalid_argument("lambda must be >= 1");
    if (sig.message_bits != lambda) {
        throw std::invalid_argument("signature message length must equal lambda");
    }
    sig.validate();
    make_base_scheme(base);  // throws on unknown tag
}

RegisterLayout PvdParams::cipher_layout() const {
    return RegisterLayout({{kMsgRegister, lambda}, {kSigRegister, sig.signature_bits()}});
}

std::pair<Bytes, Bytes> pvd_gen(const PvdParams& params, Rng& rng) {
    params.validate();
    return make_base_scheme(params.base)->gen(params.lambda, rng);
}

namespace detail {

SparseState signed_bb84(const SigningKey& sigk, const BitString& x, const BitString& theta) {
    const SparseState bb84 = prepare_bb84(x, theta);
    const SparseState widened =
        tensor_zero_register(bb84, kSigRegister, sigk.params.signature_bits());
    return coherent_sign(sigk, widened);
}

std::pair<VerificationKey, QCiphertext> pvd_enc_with(const PvdParams& params,
                                                     const BaseScheme& base, const Bytes& pk,
                                                     int m, const BitString& x,
                                                     const BitString& theta,
                                                     const SigKeyPair& keys, Rng& enc_rng) {
    if (m != 0 && m != 1) throw std::invalid_argument("plaintext must be a single bit");
    if (x.size() != params.lambda || theta.size() != params.lambda) {
        throw std::invalid_argument("x/theta widths do not match lambda");
    }
    const std::size_t h = theta.count();
    if (h >= 63 || (std::size_t{1} << h) > params.limits.support_cap) {
        throw CapExceeded("BB84 support 2^" + std::to_string(h) + " exceeds the support cap");
    }
    const int beta = m ^ (masked_parity(x, theta) ? 1 : 0);
    SparseState psi = signed_bb84(keys.sigk, x, theta);
    Bytes base_ct = base.enc(pk, encode_payload(keys.sigk, theta, beta), enc_rng);
    return {keys.vk, QCiphertext{std::move(psi), std::move(base_ct)}};
}

} // namespace detail

std::pair<VerificationKey, QCiphertext> pvd_enc(const PvdParams& params, const Bytes& pk, int m,
                                                Rng& rng) {
    params.validate();
    const BitString x = rng.bits(params.lambda);
    const BitString theta = rng.bits(params.lambda);
    const SigKeyPair keys = sig_gen(params.sig, rng);
    const auto base = make_base_scheme(params.base);
    return detail::pvd_enc_with(params, *base, pk, m, x, theta, keys, rng);
}

int pvd_dec(const PvdParams& params, const Bytes& sk, QCiphertext ct, Rng& rng) {
    if (!(ct.psi.layout() == params.cipher_layout())) {
        throw FormatError("ciphertext layout does not match parameters");
    }
    const auto base = make_base_scheme(params.base);
    const auto payload_bytes = base->dec(sk, ct.base_ct);
    if (!payload_bytes) throw DecryptError("base decryption failed");
    const Payload payload = decode_payload(params.sig, params.lambda, *payload_bytes);

    const SparseState unsigned_state = coherent_unsign(payload.sigk, ct.psi);
    const auto msg_qubits = unsigned_state.layout().qubits(kMsgRegister);
    const MeasureResult res =
        measure_hadamard(unsigned_state, msg_qubits, rng, params.limits);

    // Only positions with theta_i = 1 enter the parity; the rest of x-bar is
    // discarded.
    const bool parity = masked_parity(res.outcome, payload.theta);
    return payload.beta ^ (parity ? 1 : 0);
}

DeletionCertificate pvd_del(const PvdParams& params, QCiphertext ct, Rng& rng) {
    return pvd_del_debug(params, std::move(ct), rng).cert;
}

DeletionDebug pvd_del_debug(const PvdParams& params, QCiphertext ct, Rng& rng) {
    if (!(ct.psi.layout() == params.cipher_layout())) {
        throw FormatError("ciphertext layout does not match parameters");
    }
    const auto all = ct.psi.layout().all_qubits();
    MeasureResult res = measure_computational(ct.psi, all, rng);

    DeletionCertificate cert;
    cert.x_prime = res.outcome.slice(0, params.lambda);
    cert.sigma_prime =
        Signature::from_bits(params.sig, res.outcome.slice(params.lambda,
                                                           params.sig.signature_bits()));
    return DeletionDebug{std::move(cert), std::move(res.post)};
}

bool cert_well_formed(const SigParams& params, const DeletionCertificate& cert) {
    if (cert.x_prime.size() != params.message_bits ||
        cert.sigma_prime.chunks.size() != params.message_bits) {
        return false;
    }
    for (const auto& chunk : cert.sigma_prime.chunks) {
        if (chunk.size() != params.preimage_bits) return false;
    }
    return true;
}

bool pvd_vrfy(const VerificationKey& vk, const DeletionCertificate& cert) {
    if (!cert_well_formed(vk.params, cert)) return false;
    return sig_vrfy(vk, cert.x_prime, cert.sigma_prime);
}

std::pair<std::vector<VerificationKey>, std::vector<QCiphertext>> pvd_enc_str(
    const PvdParams& params, const Bytes& pk, const BitString& msg, Rng& rng) {
    if (msg.size() == 0) throw std::invalid_argument("message must have at least one bit");
    std::vector<VerificationKey> vks;
    std::vector<QCiphertext> cts;
    vks.reserve(msg.size());
    cts.reserve(msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i) {
        auto [vk, ct] = pvd_enc(params, pk, msg.bit(i) ? 1 : 0, rng);
        vks.push_back(std::move(vk));
        cts.push_back(std::move(ct));
    }
    return {std::move(vks), std::move(cts)};
}

BitString pvd_dec_str(const PvdParams& params, const Bytes& sk, std::vector<QCiphertext> cts,
                      Rng& rng) {
    BitString msg(cts.size());
    for (std::size_t i = 0; i < cts.size(); ++i) {
        msg.set_bit(i, pvd_dec(params, sk, std::move(cts[i]), rng) == 1);
    }
    return msg;
}

std::vector<DeletionCertificate> pvd_del_str(const PvdParams& params,
                                             std::vector<QCiphertext> cts, Rng& rng) {
    std::vector<DeletionCertificate> certs;
    certs.reserve(cts.size());
    for (auto& ct : cts) certs.push_back(pvd_del(params, std::move(ct), rng));
    return certs;
}

bool pvd_vrfy_str(const std::vector<VerificationKey>& vks,
                  const std::vector<DeletionCertificate>& certs) {
    if (vks.size() != certs.size() || vks.empty()) return false;
    for (std::size_t i = 0; i < vks.size(); ++i) {
        if (!pvd_vrfy(vks[i], certs[i])) return false;
    }
    return true;
}

bool is_honestly_signed(const QCiphertext& ct, const SigningKey& sigk) {
    const Register& msg = ct.psi.layout().at(kMsgRegister);
    const Register& sig = ct.psi.layout().at(kSigRegister);
    for (const auto& [label, amp] : ct.psi.amplitudes()) {
        const BitString m = label.slice(msg.offset, msg.width);
        if (label.slice(sig.offset, sig.width) != sig_sign_bits(sigk, m)) return false;
    }
    return true;
}

} // namespace pvdel
