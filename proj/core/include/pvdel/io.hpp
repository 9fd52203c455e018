#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pvdel/base.hpp"
#include "pvdel/scheme.hpp"

namespace pvdel {

void write_file_atomic(const std::filesystem::path& path, const Bytes& data);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
Bytes read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

std::string bytes_to_hex(const Bytes& data);
Bytes hex_to_bytes(const std::string& hex);

/// Signature key file: JSON with the parameters, the verification key, and
/// (for private files) the signing key. Public vk files omit "sigk".
std::string key_file_json(const VerificationKey& vk, const SigningKey* sigk);
std::pair<VerificationKey, std::optional<SigningKey>> parse_key_file(const std::string& text);

/// Base-scheme key files: JSON {"scheme": tag, "material": hex}.
std::string base_key_json(const std::string& tag, const Bytes& material);
std::pair<std::string, Bytes> parse_base_key(const std::string& text);

/// Certificate file: one line per message bit, the hex of the packed
/// certificate string x' followed by the hex of the packed signature.
std::string cert_file_text(const std::vector<DeletionCertificate>& certs);
std::vector<DeletionCertificate> parse_cert_file(const SigParams& params,
                                                 const std::string& text);

/// Ciphertext container: header (magic, version, lambda, signature
/// parameters, base tag, bit count), then one (state JSON, base ciphertext)
/// section per message bit.
Bytes ciphertext_container(const PvdParams& params, const std::vector<QCiphertext>& cts);
std::pair<PvdParams, std::vector<QCiphertext>> parse_ciphertext_container(const Bytes& data);

/// Standalone base ciphertext file: 4-byte magic, 1-byte scheme tag, payload.
Bytes base_ct_file(std::uint8_t scheme_tag, const Bytes& ct);
std::pair<std::uint8_t, Bytes> parse_base_ct_file(const Bytes& data);

} // namespace pvdel
