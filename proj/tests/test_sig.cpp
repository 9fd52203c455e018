#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pvdel/scheme.hpp"
#include "pvdel/signature.hpp"

using namespace pvdel;

namespace {

BitString bs(const char* s) {
    return BitString::from_string(s);
}

} // namespace

TEST_CASE("sha256 matches the NIST vector for 'abc'") {
    const std::vector<std::uint8_t> abc = {'a', 'b', 'c'};
    const auto digest = sha256(abc);
    const std::array<std::uint8_t, 8> head = {0xba, 0x78, 0x16, 0xbf,
                                              0x8f, 0x01, 0xcf, 0xea};
    CHECK(std::equal(head.begin(), head.end(), digest.begin()));
}

TEST_CASE("owf widths and truncation") {
    const OwfSpec f = make_sha256_owf(16, 12);
    const BitString y = f.eval(bs("1010101010101010"));
    CHECK(y.size() == 12);
    CHECK(!f.invert);
    CHECK_THROWS_AS(f.eval(bs("101")), std::invalid_argument);
    CHECK_THROWS_AS(make_sha256_owf(8, 300), std::invalid_argument);

    const OwfSpec id = make_identity_owf(8);
    CHECK(id.eval(bs("10110001")) == bs("10110001"));
    CHECK(id.invert(bs("10110001")) == bs("10110001"));

    const OwfSpec memo = memoized(make_sha256_owf(16, 16));
    const BitString in = bs("0110011001100110");
    CHECK(memo.eval(in) == memo.eval(in));
    CHECK(memo.eval(in) == make_sha256_owf(16, 16).eval(in));
}

TEST_CASE("planted problems") {
    Rng rng(Rng::Seed{});
    const PlantedProblem hash_problem = planted_from_owf(make_sha256_owf(32, 32));
    for (int i = 0; i < 50; ++i) {
        const auto [instance, witness] = planted_sample(hash_problem, rng);
        CHECK(planted_check(hash_problem, instance, witness));
    }
    // Wrong witness fails except for collisions.
    int hits = 0;
    for (int i = 0; i < 200; ++i) {
        const auto [instance, witness] = planted_sample(hash_problem, rng);
        if (planted_check(hash_problem, instance, rng.bits(32))) ++hits;
    }
    CHECK(hits == 0);

    // Identity problem: instance equals witness.
    const PlantedProblem id_problem = planted_from_owf(make_identity_owf(8));
    const auto [instance, witness] = planted_sample(id_problem, rng);
    CHECK(instance == witness);
    CHECK(planted_check(id_problem, instance, witness));
}

TEST_CASE("sig_gen structure and determinism") {
    // Identity backend, one position: vk equals sigk.
    Rng rng1(Rng::Seed{});
    const SigKeyPair pair1 = sig_gen(SigParams::make(1, "identity", 8), rng1);
    CHECK(pair1.vk.images[0][0] == pair1.sigk.preimages[0][0]);
    CHECK(pair1.vk.images[0][1] == pair1.sigk.preimages[0][1]);

    // Two positions: exactly 4 preimages and 4 images.
    Rng rng2(Rng::Seed{});
    const SigParams p2 = SigParams::make(2, "sha256", 32);
    const SigKeyPair pair2 = sig_gen(p2, rng2);
    CHECK(pair2.sigk.preimages.size() == 2);
    CHECK(pair2.vk.images.size() == 2);
    CHECK(pair2.sigk.to_bits().size() == p2.signing_key_bits());
    CHECK(pair2.vk.to_bits().size() == p2.verification_key_bits());
    for (std::size_t i = 0; i < 2; ++i) {
        for (int b = 0; b < 2; ++b) {
            const SigBackend backend = resolve_sig_backend(p2);
            CHECK(backend.owf.eval(pair2.sigk.preimages[i][b]) == pair2.vk.images[i][b]);
        }
    }

    // Deterministic under a fixed seed.
    Rng rng3(Rng::Seed{});
    const SigKeyPair pair3 = sig_gen(p2, rng3);
    CHECK(pair3.vk.to_bits() == pair2.vk.to_bits());
    CHECK(pair3.sigk.to_bits() == pair2.sigk.to_bits());
}

TEST_CASE("planted backend samples the same keys as the owf backend") {
    const SigParams owf_params = SigParams::make(4, "sha256", 64);
    const SigParams planted_params = SigParams::make(4, "planted-sha256", 64);
    Rng a(Rng::Seed{});
    Rng b(Rng::Seed{});
    const SigKeyPair ka = sig_gen(owf_params, a);
    const SigKeyPair kb = sig_gen(planted_params, b);
    CHECK(ka.vk.to_bits() == kb.vk.to_bits());
    CHECK(ka.sigk.to_bits() == kb.sigk.to_bits());
}

TEST_CASE("sig_sign selects preimages by message bit") {
    Rng rng(Rng::Seed{});
    const SigKeyPair keys = sig_gen(SigParams::make(2, "sha256", 32), rng);
    const Signature sigma = sig_sign(keys.sigk, bs("01"));
    CHECK(sigma.chunks[0] == keys.sigk.preimages[0][0]);
    CHECK(sigma.chunks[1] == keys.sigk.preimages[1][1]);

    const Signature zeros = sig_sign(keys.sigk, bs("00"));
    CHECK(zeros.chunks[0] == keys.sigk.preimages[0][0]);
    CHECK(zeros.chunks[1] == keys.sigk.preimages[1][0]);

    // Determinism, to the bit.
    CHECK(sig_sign(keys.sigk, bs("01")).to_bits() == sigma.to_bits());
    CHECK_THROWS_AS(sig_sign(keys.sigk, bs("011")), std::invalid_argument);
}

TEST_CASE("verification correctness for every message") {
    Rng rng(Rng::Seed{});
    for (std::size_t ell : {1u, 2u, 5u, 8u}) {
        const SigKeyPair keys = sig_gen(SigParams::make(ell, "sha256", 32), rng);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << ell); ++m) {
            const BitString msg = BitString::from_uint(m, ell);
            CHECK(sig_vrfy(keys.vk, msg, sig_sign(keys.sigk, msg)));
        }
    }
    // Random spot checks at ell = 64.
    const SigKeyPair big = sig_gen(SigParams::make(64, "sha256", 32), rng);
    for (int i = 0; i < 20; ++i) {
        const BitString msg = rng.bits(64);
        CHECK(sig_vrfy(big.vk, msg, sig_sign(big.sigk, msg)));
    }
}

TEST_CASE("flipping a message bit invalidates the signature (hash backend)") {
    Rng rng(Rng::Seed{});
    const SigKeyPair keys = sig_gen(SigParams::make(8, "sha256", 64), rng);
    int accepted = 0;
    for (int i = 0; i < 1000; ++i) {
        const BitString msg = rng.bits(8);
        const Signature sigma = sig_sign(keys.sigk, msg);
        BitString tampered = msg;
        const std::size_t pos = static_cast<std::size_t>(rng.below(8));
        tampered.set_bit(pos, !msg.bit(pos));
        if (sig_vrfy(keys.vk, tampered, sigma)) ++accepted;
    }
    CHECK(accepted == 0);

    // A zeroed signature fails unless the hash of zeros collides with vk.
    const Signature zeroed{std::vector<BitString>(8, BitString(64))};
    CHECK(!sig_vrfy(keys.vk, rng.bits(8), zeroed));
}

TEST_CASE("coherent signing on computational-basis messages") {
    Rng rng(Rng::Seed{});
    const SigParams params = SigParams::make(3, "sha256", 16);
    const SigKeyPair keys = sig_gen(params, rng);
    const BitString x = bs("101");

    // theta = 0: product state |x>|Sign(x)>.
    SparseState base = tensor_zero_register(prepare_bb84(x, BitString(3)), kSigRegister,
                                            params.signature_bits());
    const SparseState signed_state = coherent_sign(keys.sigk, base);
    CHECK(signed_state.support_size() == 1);
    const BitString expected = x.concat(sig_sign_bits(keys.sigk, x));
    CHECK(std::abs(signed_state.amplitude(expected).real() - 1.0) < 1e-12);

    // Sign then unsign returns the original state exactly.
    const SparseState sup = tensor_zero_register(prepare_bb84(x, bs("110")), kSigRegister,
                                                 params.signature_bits());
    const SparseState round = coherent_unsign(keys.sigk, coherent_sign(keys.sigk, sup));
    CHECK(round.same_support(sup));
    CHECK(round.max_amplitude_delta(sup) == 0.0);

    CHECK_THROWS_AS(coherent_sign(keys.sigk, prepare_bb84(x, bs("000"))),
                    std::invalid_argument);
}

TEST_CASE("every branch of a signed superposition carries its own signature") {
    Rng rng(Rng::Seed{});
    const SigParams params = SigParams::make(4, "sha256", 16);
    const SigKeyPair keys = sig_gen(params, rng);
    const BitString x = bs("0110");
    const BitString theta = BitString::ones(4);

    const SparseState signed_state = detail::signed_bb84(keys.sigk, x, theta);
    CHECK(signed_state.support_size() == 16);
    const Register& sig_reg = signed_state.layout().at(kSigRegister);
    for (const auto& [label, amp] : signed_state.amplitudes()) {
        const BitString m = label.slice(0, 4);
        CHECK(label.slice(sig_reg.offset, sig_reg.width) == sig_sign_bits(keys.sigk, m));
    }
}

TEST_CASE("signed branches contain only the selected preimage at computational positions") {
    // The support-content property behind one-time unforgeability: at every
    // position with theta_i = 0, each branch carries u_{i, x_i} and never
    // u_{i, 1 - x_i}.
    Rng rng(Rng::Seed{});
    const std::size_t lambda = 8;
    const SigParams params = SigParams::make(lambda, "sha256", 32);
    const SigKeyPair keys = sig_gen(params, rng);
    const BitString x = rng.bits(lambda);
    const BitString theta = rng.bits(lambda);

    const SparseState signed_state = detail::signed_bb84(keys.sigk, x, theta);
    const Register& sig_reg = signed_state.layout().at(kSigRegister);
    for (const auto& [label, amp] : signed_state.amplitudes()) {
        for (std::size_t i = 0; i < lambda; ++i) {
            if (theta.bit(i)) continue;
            const BitString chunk =
                label.slice(sig_reg.offset + i * params.preimage_bits, params.preimage_bits);
            CHECK(chunk == keys.sigk.preimages[i][x.bit(i) ? 1 : 0]);
            CHECK(chunk != keys.sigk.preimages[i][x.bit(i) ? 0 : 1]);
        }
    }
}

TEST_CASE("key and signature serialization round trips") {
    Rng rng(Rng::Seed{});
    const SigParams params = SigParams::make(5, "sha256", 24);
    const SigKeyPair keys = sig_gen(params, rng);
    const SigningKey sk2 = SigningKey::from_bits(params, keys.sigk.to_bits());
    const VerificationKey vk2 = VerificationKey::from_bits(params, keys.vk.to_bits());
    CHECK(sk2.to_bits() == keys.sigk.to_bits());
    CHECK(vk2.to_bits() == keys.vk.to_bits());

    const Signature sigma = sig_sign(keys.sigk, bs("10101"));
    CHECK(Signature::from_bits(params, sigma.to_bits()) == sigma);
    CHECK_THROWS_AS(Signature::from_bits(params, BitString(3)), std::invalid_argument);
}

TEST_CASE("unknown backends are rejected with the known list") {
    SigParams params;
    params.message_bits = 2;
    params.preimage_bits = 8;
    params.image_bits = 8;
    params.backend = "rot13";
    CHECK_THROWS_WITH_AS(params.validate(),
                         doctest::Contains("known: sha256, identity, planted-sha256"),
                         std::invalid_argument);
}
