#include "pvdel/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pvdel/errors.hpp"

namespace pvdel {

namespace {

constexpr char kCtMagic[4] = {'P', 'V', 'D', 'C'};
constexpr char kBaseCtMagic[4] = {'P', 'V', 'D', 'B'};
constexpr std::uint8_t kCtVersion = 1;

void append_u32(Bytes& out, std::uint32_t v) {
    for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void append_u64(Bytes& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(const Bytes& data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }
    Bytes take(std::size_t n) {
        need(n);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }
    std::string take_string(std::size_t n) {
        const Bytes raw = take(n);
        return std::string(raw.begin(), raw.end());
    }
    bool done() const { return pos_ == data_.size(); }

private:
    void need(std::size_t n) {
        if (pos_ + n > data_.size()) throw FormatError("truncated container");
    }
    const Bytes& data_;
    std::size_t pos_ = 0;
};

} // namespace

void write_file_atomic(const std::filesystem::path& path, const Bytes& data) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
        if (!out) throw FormatError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    write_file_atomic(path, Bytes(text.begin(), text.end()));
}

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

std::string read_text(const std::filesystem::path& path) {
    const Bytes raw = read_file(path);
    return std::string(raw.begin(), raw.end());
}

std::string bytes_to_hex(const Bytes& data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(2 * data.size());
    for (std::uint8_t b : data) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0x0F]);
    }
    return s;
}

Bytes hex_to_bytes(const std::string& hex) {
    if (hex.size() % 2 != 0) throw FormatError("hex string must have even length");
    auto digit = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw FormatError("invalid hex digit");
    };
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>((digit(hex[2 * i]) << 4) | digit(hex[2 * i + 1]));
    }
    return out;
}

namespace {

nlohmann::ordered_json params_json(const SigParams& params) {
    return {{"message_bits", params.message_bits},
            {"preimage_bits", params.preimage_bits},
            {"image_bits", params.image_bits},
            {"backend", params.backend}};
}

SigParams params_from_json(const nlohmann::json& j) {
    SigParams params;
    params.message_bits = j.at("message_bits").get<std::size_t>();
    params.preimage_bits = j.at("preimage_bits").get<std::size_t>();
    params.image_bits = j.at("image_bits").get<std::size_t>();
    params.backend = j.at("backend").get<std::string>();
    params.validate();
    return params;
}

} // namespace

std::string key_file_json(const VerificationKey& vk, const SigningKey* sigk) {
    nlohmann::ordered_json j;
    j["params"] = params_json(vk.params);
    j["vk"] = vk.to_bits().to_hex();
    if (sigk) j["sigk"] = sigk->to_bits().to_hex();
    return j.dump(2) + "\n";
}

std::pair<VerificationKey, std::optional<SigningKey>> parse_key_file(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const SigParams params = params_from_json(j.at("params"));
        const auto vk_bits = BitString::from_hex(j.at("vk").get<std::string>(),
                                                 params.verification_key_bits());
        VerificationKey vk = VerificationKey::from_bits(params, vk_bits);
        std::optional<SigningKey> sigk;
        if (j.contains("sigk")) {
            const auto sk_bits = BitString::from_hex(j.at("sigk").get<std::string>(),
                                                     params.signing_key_bits());
            sigk = SigningKey::from_bits(params, sk_bits);
        }
        return {std::move(vk), std::move(sigk)};
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("key file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("key file: ") + e.what());
    }
}

std::string base_key_json(const std::string& tag, const Bytes& material) {
    nlohmann::ordered_json j;
    j["scheme"] = tag;
    j["material"] = bytes_to_hex(material);
    return j.dump(2) + "\n";
}

std::pair<std::string, Bytes> parse_base_key(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        return {j.at("scheme").get<std::string>(),
                hex_to_bytes(j.at("material").get<std::string>())};
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("base key file: ") + e.what());
    }
}

std::string cert_file_text(const std::vector<DeletionCertificate>& certs) {
    std::string out;
    for (const auto& cert : certs) {
        out += cert.x_prime.to_hex();
        out += cert.sigma_prime.to_bits().to_hex();
        out += "\n";
    }
    return out;
}

std::vector<DeletionCertificate> parse_cert_file(const SigParams& params,
                                                 const std::string& text) {
    const std::size_t x_hex = 2 * ((params.message_bits + 7) / 8);
    const std::size_t sig_hex = 2 * ((params.signature_bits() + 7) / 8);
    std::vector<DeletionCertificate> certs;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        if (line.size() != x_hex + sig_hex) {
            throw FormatError("certificate line length does not match parameters");
        }
        DeletionCertificate cert;
        cert.x_prime = BitString::from_hex(line.substr(0, x_hex), params.message_bits);
        cert.sigma_prime = Signature::from_bits(
            params, BitString::from_hex(line.substr(x_hex), params.signature_bits()));
        certs.push_back(std::move(cert));
    }
    if (certs.empty()) throw FormatError("certificate file is empty");
    return certs;
}

Bytes ciphertext_container(const PvdParams& params, const std::vector<QCiphertext>& cts) {
    Bytes out;
    out.insert(out.end(), kCtMagic, kCtMagic + 4);
    out.push_back(kCtVersion);
    append_u32(out, static_cast<std::uint32_t>(params.lambda));
    append_u32(out, static_cast<std::uint32_t>(params.sig.preimage_bits));
    append_u32(out, static_cast<std::uint32_t>(params.sig.image_bits));
    out.push_back(static_cast<std::uint8_t>(params.sig.backend.size()));
    out.insert(out.end(), params.sig.backend.begin(), params.sig.backend.end());
    out.push_back(static_cast<std::uint8_t>(params.base.size()));
    out.insert(out.end(), params.base.begin(), params.base.end());
    append_u32(out, static_cast<std::uint32_t>(cts.size()));
    for (const auto& ct : cts) {
        const std::string json = ct.psi.to_json();
        append_u64(out, json.size());
        out.insert(out.end(), json.begin(), json.end());
        append_u64(out, ct.base_ct.size());
        out.insert(out.end(), ct.base_ct.begin(), ct.base_ct.end());
    }
    return out;
}

std::pair<PvdParams, std::vector<QCiphertext>> parse_ciphertext_container(const Bytes& data) {
    Reader r(data);
    const Bytes magic = r.take(4);
    if (!std::equal(magic.begin(), magic.end(), kCtMagic)) {
        throw FormatError("not a ciphertext container (bad magic)");
    }
    if (r.u8() != kCtVersion) throw FormatError("unsupported container version");

    PvdParams params;
    params.lambda = r.u32();
    params.sig.message_bits = params.lambda;
    params.sig.preimage_bits = r.u32();
    params.sig.image_bits = r.u32();
    params.sig.backend = r.take_string(r.u8());
    params.base = r.take_string(r.u8());
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("container parameters: ") + e.what());
    }

    const std::uint32_t nbits = r.u32();
    if (nbits == 0) throw FormatError("container holds no ciphertexts");
    std::vector<QCiphertext> cts;
    cts.reserve(nbits);
    for (std::uint32_t i = 0; i < nbits; ++i) {
        const std::string json = r.take_string(r.u64());
        SparseState psi = SparseState::from_json(json);
        if (!(psi.layout() == params.cipher_layout())) {
            throw FormatError("state layout does not match container parameters");
        }
        Bytes base_ct = r.take(r.u64());
        cts.push_back(QCiphertext{std::move(psi), std::move(base_ct)});
    }
    if (!r.done()) throw FormatError("trailing bytes after container");
    return {std::move(params), std::move(cts)};
}

Bytes base_ct_file(std::uint8_t scheme_tag, const Bytes& ct) {
    Bytes out;
    out.insert(out.end(), kBaseCtMagic, kBaseCtMagic + 4);
    out.push_back(scheme_tag);
    out.insert(out.end(), ct.begin(), ct.end());
    return out;
}

std::pair<std::uint8_t, Bytes> parse_base_ct_file(const Bytes& data) {
    Reader r(data);
    const Bytes magic = r.take(4);
    if (!std::equal(magic.begin(), magic.end(), kBaseCtMagic)) {
        throw FormatError("not a base ciphertext file (bad magic)");
    }
    const std::uint8_t tag = r.u8();
    Bytes rest = r.take(data.size() - 5);
    return {tag, std::move(rest)};
}

} // namespace pvdel
