#pragma once

#include <cstdint>
#include <optional>

#include "pvdel/adversary.hpp"
#include "pvdel/report.hpp"

namespace pvdel {

/// Configuration of the exact deletion-security oracle. The oracle
/// enumerates every (x, theta) pair and every outcome path of the strategy,
/// builds the accept-conditioned residual states for challenge bits 0 and 1,
/// and returns their exact trace distance.
///
/// idealize_base replaces the base encryption with the perfectly hiding test
/// double, turning the computational-hiding premise into an exact equality.
/// With the real base, each (x, theta) pair uses one sampled encryption,
/// shared between the two challenge bits.
struct OracleConfig {
    std::size_t lambda = 4;
    std::string backend = "sha256";
    std::size_t preimage_bits = 32;
    bool idealize_base = true;
    Limits limits;
};

ExperimentReport everlasting_oracle(const OracleConfig& config, const Adversary& adversary,
                                    const Rng& root);

/// What an honest deleter retains once the secrets are revealed after
/// deletion: the basis string and its measured certificate string. The
/// optional known_parity models a party that decrypted instead of deleting.
struct DeletionTranscript {
    std::size_t lambda = 0;
    BitString theta;
    BitString x_prime;
    bool accepted = false;
    std::optional<int> known_parity;
};

/// Exact posterior probability that the mask parity (XOR of x over Hadamard
/// positions) equals 1, given everything the transcript retains. Computed by
/// enumeration over the hidden x; throws on non-accepting transcripts.
double mask_posterior(const DeletionTranscript& transcript);

/// Honest encrypt-and-delete flow producing an accepting transcript with
/// theta revealed.
DeletionTranscript honest_deletion_transcript(std::size_t lambda, const SigParams& sig,
                                              Rng& rng);

ExperimentReport run_mask_posterior_experiment(std::size_t lambda, const SigParams& sig,
                                               std::uint64_t trials, const Rng& root);

} // namespace pvdel
