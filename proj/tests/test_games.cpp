#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pvdel/games.hpp"

using namespace pvdel;

TEST_CASE("computational_mismatch") {
    const auto x = BitString::from_string("1010");
    const auto theta = BitString::from_string("0011");
    auto x1 = x;
    x1.set_bit(0, false);  // computational position
    CHECK(computational_mismatch(x, x1, theta));
    auto x2 = x;
    x2.set_bit(3, true);  // Hadamard position
    CHECK(!computational_mismatch(x, x2, theta));
    CHECK(!computational_mismatch(x, x, theta));
}

TEST_CASE("honest measurement never wins the unforgeability game") {
    const SigParams params = SigParams::make(8, "sha256", 64);
    const auto honest = make_adversary("honest");
    const Rng root(Rng::Seed{});
    for (std::uint64_t t = 0; t < 200; ++t) {
        Rng rng = root.derive(t);
        const OtuResult r = run_otu_game(params, *honest, rng);
        CHECK(r.verified);
        CHECK(!r.mismatch_at_computational);
        CHECK(!r.win);
    }
}

TEST_CASE("bit-flip forger wins with the invertible backend whenever a computational position exists") {
    const SigParams params = SigParams::make(8, "identity", 8);
    const auto bitflip = make_adversary("bitflip");
    const Rng root(Rng::Seed{});
    std::uint64_t wins = 0;
    std::uint64_t eligible = 0;
    for (std::uint64_t t = 0; t < 500; ++t) {
        Rng rng = root.derive(t);
        const OtuResult r = run_otu_game(params, *bitflip, rng);
        CHECK(r.verified);  // preimages read straight off vk
        if (r.theta != BitString::ones(8)) {
            ++eligible;
            CHECK(r.win);
        } else {
            CHECK(!r.win);
        }
        wins += r.win ? 1 : 0;
    }
    CHECK(eligible > 0);
    CHECK(wins == eligible);
}

TEST_CASE("bit-flip forger never wins with the hash backend") {
    const SigParams params = SigParams::make(8, "sha256", 64);
    const auto bitflip = make_adversary("bitflip");
    const ExperimentReport report =
        run_otu_experiment(params, *bitflip, 1000, Rng(Rng::Seed{}));
    CHECK(*report.win_rate == 0.0);
    CHECK(report.acceptance_rate == 0.0);
    CHECK(report.transcripts.size() == 1000);
}

TEST_CASE("otu experiment report is reproducible from its seed") {
    const SigParams params = SigParams::make(6, "sha256", 32);
    const auto honest = make_adversary("honest");
    const ExperimentReport a = run_otu_experiment(params, *honest, 50, Rng(Rng::Seed{}));
    const ExperimentReport b = run_otu_experiment(params, *honest, 50, Rng(Rng::Seed{}));
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("honest deleter always passes the deletion game") {
    const PvdParams params = PvdParams::make(8, "sha256", 64);
    const auto honest = make_adversary("honest");
    const Rng root(Rng::Seed{});
    for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = root.derive(t);
        const CdResult r = run_cd_game(params, *honest, static_cast<int>(t % 2), rng);
        CHECK(r.accepted);
        CHECK(!r.forge);
        REQUIRE(r.residual.has_value());
        CHECK(r.residual->layout().width() == 0);
    }
}

TEST_CASE("random certificates are never accepted with the hash backend") {
    const PvdParams params = PvdParams::make(8, "sha256", 64);
    const auto guess = make_adversary("guess");
    const ExperimentReport report =
        run_cd_experiment(params, *guess, 0, 1000, Rng(Rng::Seed{}));
    CHECK(report.acceptance_rate == 0.0);
    CHECK(report.forge_rate == 0.0);
}

TEST_CASE("sig-only measurer: empirical acceptance matches the exact Born value") {
    // Measuring the signature register pins down the message; the recovered
    // string always verifies, so the exact acceptance probability is 1.
    const PvdParams params = PvdParams::make(6, "sha256", 32);
    const auto sig_only = make_adversary("sig-only");

    // Exact enumeration on one instance.
    Rng setup(Rng::Seed{});
    const auto base = make_base_scheme(params.base);
    const auto [pk, sk] = base->gen(params.lambda, setup);
    const BitString x = setup.bits(6);
    const BitString theta = setup.bits(6);
    const SigKeyPair keys = sig_gen(params.sig, setup);
    auto [vk, ct] = detail::pvd_enc_with(params, *base, pk, 0, x, theta, keys, setup);
    GameView view;
    view.sig = &params.sig;
    view.lambda = params.lambda;
    view.vk = &vk;
    view.psi = &ct.psi;
    double exact_accept = 0.0;
    Rng enum_rng(Rng::Seed{});
    for (const auto& branch : sig_only->enumerate(view, enum_rng)) {
        if (pvd_vrfy(vk, branch.cert)) exact_accept += branch.probability;
    }
    CHECK(exact_accept == doctest::Approx(1.0).epsilon(1e-9));

    // Sampled acceptance across fresh instances.
    const ExperimentReport report =
        run_cd_experiment(params, *sig_only, 1, 400, Rng(Rng::Seed{}));
    const double n = 400.0;
    const double variance = std::max(0.0, exact_accept * (1.0 - exact_accept));
    const double tolerance = 5.0 * std::sqrt(variance / n) + 1e-12;
    CHECK(std::abs(report.acceptance_rate - exact_accept) <= tolerance);
    CHECK(report.forge_rate == 0.0);
}

TEST_CASE("partial-keep adversary is accepted at rate 2^-k") {
    const PvdParams params = PvdParams::make(6, "sha256", 32);
    const auto partial = make_adversary("partial-keep2");
    const ExperimentReport report =
        run_cd_experiment(params, *partial, 0, 2000, Rng(Rng::Seed{}));
    // Guessing two unmeasured positions: acceptance 1/4, binomial noise.
    const double expected = 0.25;
    const double tolerance = 5.0 * std::sqrt(expected * (1.0 - expected) / 2000.0);
    CHECK(std::abs(report.acceptance_rate - expected) <= tolerance);
    CHECK(report.forge_rate == 0.0);
}

TEST_CASE("adversary registry") {
    CHECK(make_adversary("honest")->name() == "honest");
    CHECK_THROWS_AS(make_adversary("clever"), std::invalid_argument);
    CHECK(adversary_names().size() == 7);
}
