#include "pvdel/games.hpp"

#include <stdexcept>

namespace pvdel {

bool computational_mismatch(const BitString& x, const BitString& x_prime,
                            const BitString& theta) {
    if (x.size() != x_prime.size() || x.size() != theta.size()) {
        throw std::invalid_argument("computational_mismatch width mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!theta.bit(i) && x.bit(i) != x_prime.bit(i)) return true;
    }
    return false;
}

OtuResult run_otu_game(const SigParams& params, const Adversary& adversary, Rng& rng) {
    const SigKeyPair keys = sig_gen(params, rng);
    const std::size_t lambda = params.message_bits;
    const BitString x = rng.bits(lambda);
    const BitString theta = rng.bits(lambda);
    const SparseState psi = detail::signed_bb84(keys.sigk, x, theta);

    GameView view;
    view.sig = &params;
    view.lambda = lambda;
    view.vk = &keys.vk;
    view.psi = &psi;
    const AdversaryAction action = adversary.act(view, rng);

    OtuResult result;
    result.x = x;
    result.theta = theta;
    result.x_prime = action.cert.x_prime;
    result.verified = pvd_vrfy(keys.vk, action.cert);
    result.mismatch_at_computational = computational_mismatch(x, action.cert.x_prime, theta);
    result.win = result.verified && result.mismatch_at_computational;
    return result;
}

ExperimentReport run_otu_experiment(const SigParams& params, const Adversary& adversary,
                                    std::uint64_t trials, const Rng& root) {
    ExperimentReport report;
    report.experiment = "otu";
    report.adversary = adversary.name();
    report.backend = params.backend;
    report.lambda = params.message_bits;
    report.preimage_bits = params.preimage_bits;
    report.seed_hex = root.seed_hex();
    report.trials = trials;

    std::uint64_t wins = 0;
    std::uint64_t verified = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng trial_rng = root.derive(t);
        const OtuResult r = run_otu_game(params, adversary, trial_rng);
        wins += r.win ? 1 : 0;
        verified += r.verified ? 1 : 0;
        report.transcripts.push_back({t, r.verified, r.win, r.x.to_hex(), r.theta.to_hex(),
                                      r.x_prime.to_hex()});
    }
    report.acceptance_rate = trials ? static_cast<double>(verified) / trials : 0.0;
    report.forge_rate = trials ? static_cast<double>(wins) / trials : 0.0;
    report.win_rate = report.forge_rate;
    return report;
}

CdResult run_cd_game(const PvdParams& params, const Adversary& adversary, int b, Rng& rng) {
    if (b != 0 && b != 1) throw std::invalid_argument("challenge bit must be 0 or 1");
    params.validate();
    const auto base = make_base_scheme(params.base);
    const auto [pk, sk] = base->gen(params.lambda, rng);

    const BitString x = rng.bits(params.lambda);
    const BitString theta = rng.bits(params.lambda);
    const SigKeyPair keys = sig_gen(params.sig, rng);
    auto [vk, ct] = detail::pvd_enc_with(params, *base, pk, b, x, theta, keys, rng);

    GameView view;
    view.sig = &params.sig;
    view.lambda = params.lambda;
    view.vk = &vk;
    view.psi = &ct.psi;
    view.base_ct = &ct.base_ct;
    view.pk = &pk;
    AdversaryAction action = adversary.act(view, rng);

    CdResult result;
    result.x = x;
    result.theta = theta;
    result.accepted = pvd_vrfy(vk, action.cert);
    result.forge =
        result.accepted && computational_mismatch(x, action.cert.x_prime, theta);
    result.cert = std::move(action.cert);
    if (result.accepted) result.residual = std::move(action.residual);
    return result;
}

ExperimentReport run_cd_experiment(const PvdParams& params, const Adversary& adversary, int b,
                                   std::uint64_t trials, const Rng& root) {
    ExperimentReport report;
    report.experiment = "cd";
    report.adversary = adversary.name();
    report.backend = params.sig.backend;
    report.base = params.base;
    report.lambda = params.lambda;
    report.preimage_bits = params.sig.preimage_bits;
    report.seed_hex = root.seed_hex();
    report.trials = trials;

    std::uint64_t accepted = 0;
    std::uint64_t forges = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng trial_rng = root.derive(t);
        const CdResult r = run_cd_game(params, adversary, b, trial_rng);
        accepted += r.accepted ? 1 : 0;
        forges += r.forge ? 1 : 0;
        report.transcripts.push_back({t, r.accepted, r.forge, r.x.to_hex(), r.theta.to_hex(),
                                      r.cert.x_prime.to_hex()});
    }
    report.acceptance_rate = trials ? static_cast<double>(accepted) / trials : 0.0;
    report.forge_rate = trials ? static_cast<double>(forges) / trials : 0.0;
    return report;
}

} // namespace pvdel
