#include "pvdel/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "pvdel/density.hpp"
#include "pvdel/errors.hpp"
#include "pvdel/games.hpp"

namespace pvdel {

namespace {

struct SideResult {
    DensityAccumulator residual;
    double accept_mass = 0.0;
    double forge_mass = 0.0;
};

} // namespace

ExperimentReport everlasting_oracle(const OracleConfig& config, const Adversary& adversary,
                                    const Rng& root) {
    if (config.lambda == 0 || config.lambda > 8) {
        throw std::invalid_argument("oracle enumerates 4^lambda pairs; lambda must be in [1,8]");
    }
    const SigParams sig = SigParams::make(config.lambda, config.backend, config.preimage_bits);
    const SigBackend backend = resolve_sig_backend_memoized(sig);

    Rng setup_rng = root.derive(0);
    const SigKeyPair keys = sig_gen(sig, setup_rng);

    const auto ske = make_ske_hash();
    Bytes pk;
    Bytes sk;
    if (!config.idealize_base) {
        auto [pk_, sk_] = ske->gen(config.lambda, setup_rng);
        pk = std::move(pk_);
        sk = std::move(sk_);
    }

    const std::uint64_t side = std::uint64_t{1} << config.lambda;
    const double pair_weight = 1.0 / (static_cast<double>(side) * static_cast<double>(side));

    // Residual dimension is a property of the strategy and lambda alone;
    // probe it with a representative view.
    const BitString probe_zero(config.lambda);
    const SparseState probe_psi = detail::signed_bb84(keys.sigk, probe_zero, probe_zero);
    GameView probe;
    probe.sig = &sig;
    probe.lambda = config.lambda;
    probe.vk = &keys.vk;
    probe.psi = &probe_psi;
    const RegisterLayout residual_layout = adversary.residual_layout(probe);
    if (residual_layout.width() > config.limits.density_cap_qubits) {
        throw CapExceeded("adversary residual exceeds the density cap");
    }

    std::array<SideResult, 2> sides{
        SideResult{DensityAccumulator(residual_layout.width(), config.limits), 0.0, 0.0},
        SideResult{DensityAccumulator(residual_layout.width(), config.limits), 0.0, 0.0}};

    for (int b = 0; b < 2; ++b) {
        for (std::uint64_t xv = 0; xv < side; ++xv) {
            for (std::uint64_t tv = 0; tv < side; ++tv) {
                const BitString x = BitString::from_uint(xv, config.lambda);
                const BitString theta = BitString::from_uint(tv, config.lambda);
                const int beta = b ^ (masked_parity(x, theta) ? 1 : 0);
                const SparseState psi = detail::signed_bb84(keys.sigk, x, theta);
                const Bytes payload = encode_payload(keys.sigk, theta, beta);

                // Per-pair randomness is derived from (x, theta) only, so
                // both challenge bits see identical coins and the distance
                // reflects b-dependence alone.
                const std::uint64_t pair_index = xv * side + tv;
                Bytes z_ct;
                if (config.idealize_base) {
                    Rng ideal_rng = root.derive(1);
                    z_ct = make_ideal_base()->enc(pk, payload, ideal_rng);
                } else {
                    Rng enc_rng = root.derive(2 + 2 * pair_index);
                    z_ct = ske->enc(pk, payload, enc_rng);
                }

                GameView view;
                view.sig = &sig;
                view.lambda = config.lambda;
                view.vk = &keys.vk;
                view.psi = &psi;
                view.base_ct = &z_ct;
                view.pk = &pk;

                Rng adv_rng = root.derive(3 + 2 * pair_index);
                const auto branches = adversary.enumerate(view, adv_rng);

                double branch_mass = 0.0;
                for (const auto& branch : branches) {
                    branch_mass += branch.probability;
                    const bool ok = cert_well_formed(sig, branch.cert) &&
                                    sig_vrfy_with(backend, keys.vk, branch.cert.x_prime,
                                                  branch.cert.sigma_prime);
                    if (!ok) continue;
                    const double mass = pair_weight * branch.probability;
                    sides[b].accept_mass += mass;
                    if (computational_mismatch(x, branch.cert.x_prime, theta)) {
                        sides[b].forge_mass += mass;
                    }
                    sides[b].residual.add(mass, branch.residual,
                                          branch.residual.layout().all_qubits());
                }
                if (std::abs(branch_mass - 1.0) > kNormTol) {
                    throw std::invalid_argument("strategy branches do not sum to probability 1");
                }
            }
        }
    }

    ExperimentReport report;
    report.experiment = "everlasting";
    report.adversary = adversary.name();
    report.backend = config.backend;
    report.base = config.idealize_base ? "ideal" : "ske-hash";
    report.lambda = config.lambda;
    report.preimage_bits = config.preimage_bits;
    report.seed_hex = root.seed_hex();
    report.trials = 2 * side * side;
    report.acceptance_rate = 0.5 * (sides[0].accept_mass + sides[1].accept_mass);
    report.forge_rate = 0.5 * (sides[0].forge_mass + sides[1].forge_mass);
    report.td_exact = true;
    if (sides[0].accept_mass <= 0.0 && sides[1].accept_mass <= 0.0) {
        report.td_vacuous = true;
        report.trace_distance = 0.0;
    } else if (sides[0].accept_mass <= 0.0 || sides[1].accept_mass <= 0.0) {
        // One side never accepts: the conditioned states are maximally
        // distinguishable from the other side's.
        report.trace_distance = 1.0;
    } else {
        report.trace_distance =
            trace_distance(sides[0].residual.normalized(), sides[1].residual.normalized());
    }
    return report;
}

double mask_posterior(const DeletionTranscript& transcript) {
    if (!transcript.accepted) throw std::invalid_argument("transcript is not accepting");
    if (transcript.known_parity) {
        const int p = *transcript.known_parity;
        if (p != 0 && p != 1) throw std::invalid_argument("known parity must be 0 or 1");
        return static_cast<double>(p);
    }
    const std::size_t lambda = transcript.lambda;
    if (lambda == 0 || lambda > 20) {
        throw std::invalid_argument("posterior enumeration supports lambda in [1,20]");
    }
    if (transcript.theta.size() != lambda || transcript.x_prime.size() != lambda) {
        throw std::invalid_argument("transcript widths do not match lambda");
    }

    // Every hidden x consistent with the certificate string at computational
    // positions is equally likely; count mask parities over that set.
    std::uint64_t n_total = 0;
    std::uint64_t n_one = 0;
    for (std::uint64_t xv = 0; xv < (std::uint64_t{1} << lambda); ++xv) {
        const BitString x = BitString::from_uint(xv, lambda);
        bool consistent = true;
        for (std::size_t i = 0; i < lambda; ++i) {
            if (!transcript.theta.bit(i) && x.bit(i) != transcript.x_prime.bit(i)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        ++n_total;
        if (masked_parity(x, transcript.theta)) ++n_one;
    }
    return static_cast<double>(n_one) / static_cast<double>(n_total);
}

DeletionTranscript honest_deletion_transcript(std::size_t lambda, const SigParams& sig,
                                              Rng& rng) {
    const SigKeyPair keys = sig_gen(sig, rng);
    const BitString x = rng.bits(lambda);
    const BitString theta = rng.bits(lambda);
    const SparseState psi = detail::signed_bb84(keys.sigk, x, theta);
    const auto all = psi.layout().all_qubits();
    const MeasureResult res = measure_computational(psi, all, rng);

    DeletionTranscript transcript;
    transcript.lambda = lambda;
    transcript.theta = theta;
    transcript.x_prime = res.outcome.slice(0, lambda);
    const Signature sigma =
        Signature::from_bits(sig, res.outcome.slice(lambda, sig.signature_bits()));
    transcript.accepted = sig_vrfy(keys.vk, transcript.x_prime, sigma);
    return transcript;
}

ExperimentReport run_mask_posterior_experiment(std::size_t lambda, const SigParams& sig,
                                               std::uint64_t trials, const Rng& root) {
    ExperimentReport report;
    report.experiment = "mask-posterior";
    report.adversary = "honest";
    report.backend = sig.backend;
    report.lambda = lambda;
    report.preimage_bits = sig.preimage_bits;
    report.seed_hex = root.seed_hex();
    report.trials = trials;

    double lo = 1.0;
    double hi = 0.0;
    std::uint64_t accepted = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng trial_rng = root.derive(t);
        const DeletionTranscript transcript = honest_deletion_transcript(lambda, sig, trial_rng);
        if (!transcript.accepted) continue;
        ++accepted;
        const double p = mask_posterior(transcript);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
        report.transcripts.push_back({t, true, false, "", transcript.theta.to_hex(),
                                      transcript.x_prime.to_hex()});
    }
    report.acceptance_rate = trials ? static_cast<double>(accepted) / trials : 0.0;
    report.posterior_min = lo;
    report.posterior_max = hi;
    return report;
}

} // namespace pvdel
