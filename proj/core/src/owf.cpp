#include "pvdel/owf.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace pvdel {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 32> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != digest.size()) {
        throw std::runtime_error("SHA-256 evaluation failed");
    }
    return digest;
}

OwfSpec make_sha256_owf(std::size_t input_bits, std::size_t output_bits) {
    if (input_bits == 0 || output_bits == 0 || output_bits > 256) {
        throw std::invalid_argument("sha256 owf widths must be in [1,256]");
    }
    OwfSpec spec;
    spec.name = "sha256";
    spec.input_bits = input_bits;
    spec.output_bits = output_bits;
    spec.eval = [input_bits, output_bits](const BitString& in) {
        if (in.size() != input_bits) throw std::invalid_argument("owf input width mismatch");
        const auto digest = sha256(in.bytes());
        std::vector<std::uint8_t> bytes(digest.begin(), digest.begin() + (output_bits + 7) / 8);
        if (output_bits % 8 != 0) {
            bytes.back() &= static_cast<std::uint8_t>(0xFF << (8 - output_bits % 8));
        }
        return BitString::from_bytes(std::move(bytes), output_bits);
    };
    return spec;
}

OwfSpec make_identity_owf(std::size_t bits) {
    if (bits == 0) throw std::invalid_argument("identity owf width must be positive");
    OwfSpec spec;
    spec.name = "identity";
    spec.input_bits = bits;
    spec.output_bits = bits;
    spec.eval = [bits](const BitString& in) {
        if (in.size() != bits) throw std::invalid_argument("owf input width mismatch");
        return in;
    };
    spec.invert = spec.eval;
    return spec;
}

OwfSpec memoized(OwfSpec spec) {
    auto cache = std::make_shared<std::map<BitString, BitString>>();
    auto inner = spec.eval;
    spec.eval = [cache, inner](const BitString& in) {
        auto it = cache->find(in);
        if (it != cache->end()) return it->second;
        BitString out = inner(in);
        cache->emplace(in, out);
        return out;
    };
    return spec;
}

PlantedProblem planted_from_owf(const OwfSpec& f) {
    PlantedProblem problem;
    problem.name = "planted-" + f.name;
    problem.instance_bits = f.output_bits;
    problem.witness_bits = f.input_bits;
    const auto eval = f.eval;
    const std::size_t witness_bits = f.input_bits;
    problem.sample = [eval, witness_bits](Rng& rng) {
        BitString witness = rng.bits(witness_bits);
        BitString instance = eval(witness);
        return std::make_pair(std::move(instance), std::move(witness));
    };
    problem.check = [eval](const BitString& instance, const BitString& witness) {
        return eval(witness) == instance;
    };
    return problem;
}

std::pair<BitString, BitString> planted_sample(const PlantedProblem& problem, Rng& rng) {
    return problem.sample(rng);
}

bool planted_check(const PlantedProblem& problem, const BitString& instance,
                   const BitString& witness) {
    if (instance.size() != problem.instance_bits || witness.size() != problem.witness_bits) {
        throw std::invalid_argument("planted_check width mismatch");
    }
    return problem.check(instance, witness);
}

} // namespace pvdel
