// Batch front end: key generation, encrypt/decrypt/delete/verify over files,
// and experiment execution with JSON reports.
//
// Exit codes: 0 success/accept, 1 reject or decryption failure, 2 usage,
// 3 malformed file, 4 resource cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvdel/errors.hpp"
#include "pvdel/games.hpp"
#include "pvdel/io.hpp"
#include "pvdel/oracle.hpp"

namespace fs = std::filesystem;
using namespace pvdel;

namespace {

constexpr const char* kDefaultSeed =
    "0000000000000000000000000000000000000000000000000000000000000000";

struct CommonOpts {
    std::size_t lambda = 16;
    std::size_t lambda_f = 128;
    std::string backend = "sha256";
    std::string base = "ske-hash";
    std::string seed;
    std::string out = ".";
    std::size_t support_cap = Limits{}.support_cap;
    std::size_t density_cap = Limits{}.density_cap_qubits;
};

Rng make_rng(const std::string& seed_flag) {
    std::string seed = seed_flag;
    if (seed.empty()) {
        if (const char* env = std::getenv("PVD_SEED")) seed = env;
    }
    if (seed.empty()) seed = kDefaultSeed;
    return Rng::from_hex(seed);
}

Limits make_limits(const CommonOpts& opts) {
    Limits limits;
    limits.support_cap = opts.support_cap;
    limits.density_cap_qubits = opts.density_cap;
    return limits;
}

PvdParams make_params(const CommonOpts& opts) {
    PvdParams params = PvdParams::make(opts.lambda, opts.backend, opts.lambda_f, opts.base);
    params.limits = make_limits(opts);
    return params;
}

void add_config_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--lambda", opts.lambda, "BB84 length in qubits");
    cmd->add_option("--lambda-f", opts.lambda_f, "signature preimage width in bits");
    cmd->add_option("--backend", opts.backend, "signature backend name");
    cmd->add_option("--base", opts.base, "base encryption scheme tag");
    cmd->add_option("--seed", opts.seed, "256-bit seed as 64 hex characters");
    cmd->add_option("--support-cap", opts.support_cap, "max sparse-state support entries");
    cmd->add_option("--density-cap", opts.density_cap, "max density-matrix qubits");
}

fs::path tombstone_path(const fs::path& ct_path) {
    return fs::path(ct_path.string() + ".consumed");
}

void require_unconsumed(const fs::path& ct_path) {
    if (fs::exists(tombstone_path(ct_path))) {
        throw FormatError("ciphertext consumed: " + ct_path.string() +
                          " was already deleted or decrypted");
    }
}

void consume(const fs::path& ct_path) {
    write_text_atomic(tombstone_path(ct_path), "consumed\n");
}

int cmd_keygen(const CommonOpts& opts) {
    const PvdParams params = make_params(opts);
    Rng rng = make_rng(opts.seed);
    const auto [pk, sk] = pvd_gen(params, rng);
    fs::create_directories(opts.out);
    write_text_atomic(fs::path(opts.out) / "pk.json", base_key_json(params.base, pk));
    write_text_atomic(fs::path(opts.out) / "sk.json", base_key_json(params.base, sk));
    std::cout << "wrote pk.json and sk.json to " << opts.out << "\n";
    return 0;
}

int cmd_encrypt(const CommonOpts& opts, const std::string& pk_file,
                const std::string& message) {
    const PvdParams params = make_params(opts);
    const auto [scheme, pk] = parse_base_key(read_text(pk_file));
    if (scheme != params.base) {
        throw FormatError("public key is for base scheme '" + scheme + "', expected '" +
                          params.base + "'");
    }
    const BitString msg = BitString::from_string(message);
    if (msg.size() == 0) throw CLI::ValidationError("message must have at least one bit");

    Rng rng = make_rng(opts.seed);
    const auto [vks, cts] = pvd_enc_str(params, pk, msg, rng);

    fs::create_directories(opts.out);
    write_file_atomic(fs::path(opts.out) / "ct.pvd", ciphertext_container(params, cts));
    std::string vk_text;
    if (vks.size() == 1) {
        vk_text = key_file_json(vks[0], nullptr);
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& vk : vks) {
            arr.push_back(nlohmann::ordered_json::parse(key_file_json(vk, nullptr)));
        }
        vk_text = arr.dump(2) + "\n";
    }
    write_text_atomic(fs::path(opts.out) / "vk.json", vk_text);
    std::cout << "wrote ct.pvd and vk.json to " << opts.out << "\n";
    return 0;
}

std::vector<VerificationKey> parse_vk_file(const std::string& text) {
    // Either a single key object or an array of them.
    std::vector<VerificationKey> vks;
    const auto trimmed = text.find_first_not_of(" \t\r\n");
    if (trimmed != std::string::npos && text[trimmed] == '[') {
        const auto j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array()) throw FormatError("vk file: bad JSON array");
        for (const auto& entry : j) {
            vks.push_back(parse_key_file(entry.dump()).first);
        }
    } else {
        vks.push_back(parse_key_file(text).first);
    }
    if (vks.empty()) throw FormatError("vk file holds no keys");
    return vks;
}

int cmd_decrypt(const std::string& sk_file, const std::string& ct_file,
                const std::string& seed) {
    require_unconsumed(ct_file);
    const auto [params, cts] = parse_ciphertext_container(read_file(ct_file));
    const auto [scheme, sk] = parse_base_key(read_text(sk_file));
    if (scheme != params.base) {
        throw FormatError("secret key is for base scheme '" + scheme + "', expected '" +
                          params.base + "'");
    }
    Rng rng = make_rng(seed);
    const BitString msg = pvd_dec_str(params, sk, cts, rng);
    consume(ct_file);
    std::cout << msg.to_string() << "\n";
    return 0;
}

int cmd_delete(const std::string& ct_file, const std::string& seed, const std::string& out) {
    require_unconsumed(ct_file);
    const auto [params, cts] = parse_ciphertext_container(read_file(ct_file));
    Rng rng = make_rng(seed);
    const auto certs = pvd_del_str(params, cts, rng);
    consume(ct_file);
    write_text_atomic(out, cert_file_text(certs));
    std::cout << "wrote certificate to " << out << "\n";
    return 0;
}

// Public verification: the argument list admits only the verification key
// and the certificate; no secret input exists.
int cmd_verify(const std::string& vk_file, const std::string& cert_file) {
    const auto vks = parse_vk_file(read_text(vk_file));
    const auto certs = parse_cert_file(vks.front().params, read_text(cert_file));
    if (certs.size() != vks.size()) {
        throw FormatError("certificate count does not match verification key count");
    }
    bool ok = true;
    for (std::size_t i = 0; i < vks.size(); ++i) {
        if (!pvd_vrfy(vks[i], certs[i])) ok = false;
    }
    std::cout << (ok ? "accept" : "reject") << "\n";
    return ok ? 0 : 1;
}

int finish_report(const ExperimentReport& report, const std::string& out,
                  const std::string& golden) {
    const std::string json = report.to_json();
    write_text_atomic(out, json);
    std::cout << "wrote report to " << out << "\n";
    if (!golden.empty()) {
        if (!fs::exists(golden)) {
            write_text_atomic(golden, json);
            std::cout << "wrote golden file " << golden << "\n";
        } else if (read_text(golden) != json) {
            std::cerr << "report differs from golden file " << golden << "\n";
            return 1;
        } else {
            std::cout << "report matches golden file " << golden << "\n";
        }
    }
    return 0;
}

int cmd_experiment(const std::string& name, const CommonOpts& opts,
                   const std::string& adversary_name, std::uint64_t trials, int challenge_bit,
                   bool idealize_base, const std::string& out, const std::string& golden) {
    const Rng root = make_rng(opts.seed);
    ExperimentReport report;
    if (name == "otu") {
        const auto adversary = make_adversary(adversary_name);
        const SigParams sig = SigParams::make(opts.lambda, opts.backend, opts.lambda_f);
        report = run_otu_experiment(sig, *adversary, trials, root);
    } else if (name == "cd") {
        const auto adversary = make_adversary(adversary_name);
        const PvdParams params = make_params(opts);
        report = run_cd_experiment(params, *adversary, challenge_bit, trials, root);
    } else if (name == "everlasting") {
        const auto adversary = make_adversary(adversary_name);
        OracleConfig config;
        config.lambda = opts.lambda;
        config.backend = opts.backend;
        config.preimage_bits = opts.lambda_f;
        config.idealize_base = idealize_base;
        config.limits = make_limits(opts);
        report = everlasting_oracle(config, *adversary, root);
    } else if (name == "mask-posterior") {
        const SigParams sig = SigParams::make(opts.lambda, opts.backend, opts.lambda_f);
        report = run_mask_posterior_experiment(opts.lambda, sig, trials, root);
    } else {
        throw CLI::ValidationError(
            "unknown experiment '" + name + "' (known: otu, cd, everlasting, mask-posterior)");
    }
    return finish_report(report, out, golden);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"public-key encryption with publicly verifiable deletion"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* keygen = app.add_subcommand("keygen", "generate base-scheme key files");
    add_config_flags(keygen, opts);
    keygen->add_option("--out", opts.out, "output directory");

    auto* encrypt = app.add_subcommand("encrypt", "encrypt a bit string");
    std::string message;
    std::string pk_file;
    encrypt->add_option("message", message, "plaintext bits, e.g. 0110")->required();
    encrypt->add_option("--pk", pk_file, "public key file")->required();
    add_config_flags(encrypt, opts);
    encrypt->add_option("--out", opts.out, "output directory");

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    std::string sk_file;
    std::string ct_file;
    std::string seed_flag;
    decrypt->add_option("--sk", sk_file, "secret key file")->required();
    decrypt->add_option("--ct", ct_file, "ciphertext file")->required();
    decrypt->add_option("--seed", seed_flag, "measurement seed");

    auto* del = app.add_subcommand("delete", "measure a ciphertext into a certificate");
    std::string cert_out = "cert.hex";
    del->add_option("--ct", ct_file, "ciphertext file")->required();
    del->add_option("--seed", seed_flag, "measurement seed");
    del->add_option("--out", cert_out, "certificate output file");

    auto* verify = app.add_subcommand("verify", "publicly verify a deletion certificate");
    std::string vk_file;
    std::string cert_file;
    verify->add_option("--vk", vk_file, "verification key file")->required();
    verify->add_option("--cert", cert_file, "certificate file")->required();

    auto* experiment = app.add_subcommand("experiment", "run a security experiment");
    std::string exp_name;
    std::string adversary_name = "honest";
    std::uint64_t trials = 1000;
    int challenge_bit = 0;
    bool idealize_base = true;
    std::string report_out = "report.json";
    std::string golden;
    experiment->add_option("name", exp_name, "otu | cd | everlasting | mask-posterior")
        ->required();
    add_config_flags(experiment, opts);
    experiment->add_option("--adversary", adversary_name, "strategy name");
    experiment->add_option("--trials", trials, "number of seeded trials");
    experiment->add_option("--b", challenge_bit, "challenge bit for the cd game");
    experiment->add_flag("--idealize-base,!--no-idealize-base", idealize_base,
                         "use the perfectly hiding base double in the oracle");
    experiment->add_option("--out", report_out, "report output file");
    experiment->add_option("--golden", golden, "golden report to write or compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (keygen->parsed()) return cmd_keygen(opts);
        if (encrypt->parsed()) return cmd_encrypt(opts, pk_file, message);
        if (decrypt->parsed()) return cmd_decrypt(sk_file, ct_file, seed_flag);
        if (del->parsed()) return cmd_delete(ct_file, seed_flag, cert_out);
        if (verify->parsed()) return cmd_verify(vk_file, cert_file);
        if (experiment->parsed()) {
            // Default experiment dimensions differ from the file commands'.
            if (exp_name == "everlasting" && !experiment->count("--lambda")) opts.lambda = 4;
            if (exp_name == "everlasting" && !experiment->count("--lambda-f")) {
                opts.lambda_f = 32;
            }
            if (exp_name == "mask-posterior" && !experiment->count("--lambda")) opts.lambda = 4;
            return cmd_experiment(exp_name, opts, adversary_name, trials, challenge_bit,
                                  idealize_base, report_out, golden);
        }
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const PayloadError& e) {
        std::cerr << "payload error: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const DecryptError& e) {
        std::cerr << "decryption failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
