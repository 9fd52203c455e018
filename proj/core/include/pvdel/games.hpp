#pragma once

#include <cstdint>
#include <optional>

#include "pvdel/adversary.hpp"
#include "pvdel/report.hpp"
#include "pvdel/scheme.hpp"

namespace pvdel {

/// One run of the one-time-unforgeability game for BB84 states: the
/// adversary gets (vk, signed BB84 state) and wins iff its certificate
/// verifies while disagreeing with x at some computational position.
struct OtuResult {
    bool win = false;
    bool mismatch_at_computational = false;
    bool verified = false;
    BitString x;
    BitString theta;
    BitString x_prime;
};

OtuResult run_otu_game(const SigParams& params, const Adversary& adversary, Rng& rng);
ExperimentReport run_otu_experiment(const SigParams& params, const Adversary& adversary,
                                    std::uint64_t trials, const Rng& root);

/// One run of the certified-deletion game: the challenger encrypts bit b,
/// the adversary returns a certificate and residual state, and the game
/// outputs the residual on acceptance. The forge event (verified certificate
/// disagreeing with x at a computational position) is tracked per trial.
struct CdResult {
    bool accepted = false;
    bool forge = false;
    DeletionCertificate cert;
    std::optional<SparseState> residual;
    BitString x;
    BitString theta;
};

CdResult run_cd_game(const PvdParams& params, const Adversary& adversary, int b, Rng& rng);
ExperimentReport run_cd_experiment(const PvdParams& params, const Adversary& adversary, int b,
                                   std::uint64_t trials, const Rng& root);

/// True iff x and x_prime disagree at some position with theta_i = 0.
bool computational_mismatch(const BitString& x, const BitString& x_prime,
                            const BitString& theta);

} // namespace pvdel
