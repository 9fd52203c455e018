#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "pvdel/bitstring.hpp"
#include "pvdel/rng.hpp"

namespace pvdel {

/// One-way function candidate on fixed-width bit strings.
///
/// The shipped backends are SHA-256 truncated to the output width (the real
/// one) and the identity map (intentionally invertible, for negative-control
/// experiments). invert is null when no efficient inverse is known.
struct OwfSpec {
    std::string name;
    std::size_t input_bits = 0;
    std::size_t output_bits = 0;
    std::function<BitString(const BitString&)> eval;
    std::function<BitString(const BitString&)> invert;
};

OwfSpec make_sha256_owf(std::size_t input_bits, std::size_t output_bits);
OwfSpec make_identity_owf(std::size_t bits);
/// Same spec with eval results cached; for enumeration-heavy experiment runs.
OwfSpec memoized(OwfSpec spec);

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

/// Planted instance-witness sampler for an NP relation: sample() outputs
/// pairs satisfying check() with probability 1.
struct PlantedProblem {
    std::string name;
    std::size_t instance_bits = 0;
    std::size_t witness_bits = 0;
    std::function<std::pair<BitString, BitString>(Rng&)> sample;  // (instance, witness)
    std::function<bool(const BitString&, const BitString&)> check;
};

/// The OWF-derived problem: witness w uniform, instance f(w), relation
/// f(w) = instance. Consumes the rng exactly like direct key sampling, so
/// the two backends produce identical key material under a shared seed.
PlantedProblem planted_from_owf(const OwfSpec& f);

std::pair<BitString, BitString> planted_sample(const PlantedProblem& problem, Rng& rng);
bool planted_check(const PlantedProblem& problem, const BitString& instance,
                   const BitString& witness);

} // namespace pvdel
