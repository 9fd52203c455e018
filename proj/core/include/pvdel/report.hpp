#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvdel {

struct TrialRecord {
    std::uint64_t trial = 0;
    bool accepted = false;
    bool forge = false;
    std::string x_hex;
    std::string theta_hex;
    std::string x_prime_hex;
};

/// Acceptance statistics and (where computed) the exact trace distance of a
/// security game run. Serializes to canonical JSON for golden-file
/// comparison; transcripts are replayable from (seed, trial index).
struct ExperimentReport {
    std::string experiment;
    std::string adversary;
    std::string backend;
    std::string base;
    std::size_t lambda = 0;
    std::size_t preimage_bits = 0;
    std::string seed_hex;
    std::uint64_t trials = 0;

    double acceptance_rate = 0.0;
    double forge_rate = 0.0;
    std::optional<double> win_rate;
    std::optional<double> trace_distance;
    bool td_exact = false;
    /// No accepted mass on either side; the conditioned states are empty and
    /// the distance is reported as 0.
    bool td_vacuous = false;
    std::optional<double> posterior_min;
    std::optional<double> posterior_max;

    std::vector<TrialRecord> transcripts;

    void validate() const;
    std::string to_json() const;
};

} // namespace pvdel
