#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pvdel/errors.hpp"
#include "pvdel/state.hpp"

using namespace pvdel;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

SparseState plus_state() {
    return apply_h(SparseState::basis(RegisterLayout({{"Q", 1}}), BitString(1)), 0);
}

BitString bs(const char* s) {
    return BitString::from_string(s);
}

} // namespace

TEST_CASE("prepare_bb84 basic states") {
    // Computational basis: x=0, theta=0.
    const SparseState s0 = prepare_bb84(bs("0"), bs("0"));
    CHECK(s0.support_size() == 1);
    CHECK(s0.amplitude(bs("0")).real() == doctest::Approx(1.0).epsilon(1e-12));

    // H|1> = |->: x=1, theta=1.
    const SparseState s1 = prepare_bb84(bs("1"), bs("1"));
    CHECK(s1.support_size() == 2);
    CHECK(s1.amplitude(bs("0")).real() == doctest::Approx(kInvSqrt2));
    CHECK(s1.amplitude(bs("1")).real() == doctest::Approx(-kInvSqrt2));

    // |1> tensor |+>: x=10, theta=01.
    const SparseState s2 = prepare_bb84(bs("10"), bs("01"));
    CHECK(s2.support_size() == 2);
    CHECK(s2.amplitude(bs("10")).real() == doctest::Approx(kInvSqrt2));
    CHECK(s2.amplitude(bs("11")).real() == doctest::Approx(kInvSqrt2));

    CHECK_THROWS_AS(prepare_bb84(bs("01"), bs("0")), std::invalid_argument);
    CHECK_THROWS_AS(prepare_bb84(BitString(0), BitString(0)), std::invalid_argument);
}

TEST_CASE("prepare_bb84 amplitudes and signs at width 4") {
    const BitString x = bs("1011");
    const BitString theta = bs("1101");
    const SparseState s = prepare_bb84(x, theta);
    CHECK(s.support_size() == 8);  // 2^h, h = 3
    const double mag = std::pow(2.0, -1.5);
    for (const auto& [label, amp] : s.amplitudes()) {
        CHECK(std::abs(std::abs(amp.real()) - mag) < 1e-12);
        CHECK(amp.imag() == 0.0);
        // Computational position carries x_i.
        CHECK(label.bit(2) == x.bit(2));
        // Sign is (-1)^<x,label> over Hadamard positions.
        bool sign = false;
        for (std::size_t i : {0, 1, 3}) {
            if (x.bit(i) && label.bit(i)) sign = !sign;
        }
        CHECK((amp.real() < 0) == sign);
    }
}

TEST_CASE("apply_h single qubit") {
    const SparseState plus = plus_state();
    CHECK(plus.support_size() == 2);
    CHECK(plus.amplitude(bs("0")).real() == doctest::Approx(kInvSqrt2));
    CHECK(plus.amplitude(bs("1")).real() == doctest::Approx(kInvSqrt2));

    // H|-> = |1>.
    const SparseState minus = prepare_bb84(bs("1"), bs("1"));
    const SparseState one = apply_h(minus, 0);
    CHECK(one.support_size() == 1);
    CHECK(one.amplitude(bs("1")).real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(apply_h(plus, 1), std::invalid_argument);
}

TEST_CASE("H squared is the identity, exactly") {
    Rng rng(Rng::Seed{});
    for (int trial = 0; trial < 20; ++trial) {
        const BitString x = rng.bits(5);
        const BitString theta = rng.bits(5);
        const SparseState s = prepare_bb84(x, theta);
        for (std::size_t q = 0; q < 5; ++q) {
            const SparseState round = apply_h(apply_h(s, q), q);
            CHECK(round.same_support(s));
            CHECK(round.max_amplitude_delta(s) < 1e-12);
        }
    }
}

TEST_CASE("apply_h support cap") {
    SparseState s = SparseState::basis(RegisterLayout({{"Q", 2}}), BitString(2));
    Limits tight;
    tight.support_cap = 2;
    s = apply_h(s, 0, tight);
    CHECK_THROWS_AS(apply_h(s, 1, tight), CapExceeded);
}

TEST_CASE("norm preservation across operations") {
    Rng rng(Rng::Seed{});
    for (int trial = 0; trial < 10; ++trial) {
        const SparseState s = prepare_bb84(rng.bits(6), rng.bits(6));
        CHECK(std::abs(s.norm_sq() - 1.0) < 1e-9);
        const SparseState h = apply_h(s, trial % 6);
        CHECK(std::abs(h.norm_sq() - 1.0) < 1e-9);
        const SparseState wide = tensor_zero_register(s, "AUX", 3);
        const SparseState mapped = append_classical_function(
            wide, "MSG", "AUX", [](const BitString& m) { return m.slice(0, 3); });
        CHECK(std::abs(mapped.norm_sq() - 1.0) < 1e-9);
        auto qubits = wide.layout().qubits("MSG");
        const MeasureResult res = measure_computational(mapped, qubits, rng);
        CHECK(std::abs(res.post.norm_sq() - 1.0) < 1e-9);
    }
}

TEST_CASE("append_classical_function copies and uncomputes") {
    // g = identity on a computational-basis state: |x>|0> -> |x>|x>.
    const BitString x = bs("1011");
    SparseState s = tensor_zero_register(prepare_bb84(x, BitString(4)), "AUX", 4);
    const auto ident = [](const BitString& m) { return m; };
    const SparseState copied = append_classical_function(s, "MSG", "AUX", ident);
    CHECK(copied.support_size() == 1);
    CHECK(std::abs(copied.amplitude(x.concat(x)).real() - 1.0) < 1e-12);

    // Applying the same function twice is the identity, exactly.
    Rng rng(Rng::Seed{});
    const SparseState sup = tensor_zero_register(prepare_bb84(rng.bits(4), rng.bits(4)), "AUX", 4);
    const auto twice =
        append_classical_function(append_classical_function(sup, "MSG", "AUX", ident), "MSG",
                                  "AUX", ident);
    CHECK(twice.same_support(sup));
    CHECK(twice.max_amplitude_delta(sup) == 0.0);

    const auto bad = [](const BitString& m) { return m.slice(0, 2); };
    CHECK_THROWS_AS(append_classical_function(sup, "MSG", "AUX", bad), std::invalid_argument);
}

TEST_CASE("measure_computational on basis and superposed states") {
    Rng rng(Rng::Seed{});
    const SparseState s01 = SparseState::basis(RegisterLayout({{"Q", 2}}), bs("01"));
    const auto all = s01.layout().all_qubits();
    const MeasureResult res = measure_computational(s01, all, rng);
    CHECK(res.outcome == bs("01"));
    CHECK(res.probability == doctest::Approx(1.0));
    CHECK(res.post.support_size() == 1);

    // Qubit of |+>: exact halves.
    const auto dist = outcome_distribution(plus_state(), std::vector<std::size_t>{0});
    CHECK(dist.at(bs("0")) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist.at(bs("1")) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measure_hadamard basics") {
    Rng rng(Rng::Seed{});
    // |+> measured in the Hadamard basis gives 0 with probability 1.
    for (int i = 0; i < 10; ++i) {
        const MeasureResult res =
            measure_hadamard(plus_state(), std::vector<std::size_t>{0}, rng);
        CHECK(res.outcome == bs("0"));
        CHECK(res.probability == doctest::Approx(1.0));
    }
    // |1> measured in the Hadamard basis is a fair coin; check the exact
    // distribution after rotation.
    const SparseState one = SparseState::basis(RegisterLayout({{"Q", 1}}), bs("1"));
    const auto dist = outcome_distribution(apply_h(one, 0), std::vector<std::size_t>{0});
    CHECK(dist.at(bs("0")) == doctest::Approx(0.5));
    CHECK(dist.at(bs("1")) == doctest::Approx(0.5));
}

TEST_CASE("BB84 round trip: each basis returns x at its positions") {
    Rng rng(Rng::Seed{});
    for (int trial = 0; trial < 30; ++trial) {
        const BitString x = rng.bits(6);
        const BitString theta = rng.bits(6);
        SparseState s = prepare_bb84(x, theta);

        // Exact: after rotating the Hadamard positions back, every support
        // label carries x_i there.
        SparseState rotated = s;
        for (std::size_t i = 0; i < 6; ++i) {
            if (theta.bit(i)) rotated = apply_h(rotated, i);
        }
        for (const auto& [label, amp] : rotated.amplitudes()) {
            for (std::size_t i = 0; i < 6; ++i) {
                if (theta.bit(i)) CHECK(label.bit(i) == x.bit(i));
            }
        }

        // Sampled: computational positions agree under computational
        // measurement, Hadamard positions under Hadamard measurement.
        std::vector<std::size_t> comp;
        std::vector<std::size_t> had;
        for (std::size_t i = 0; i < 6; ++i) (theta.bit(i) ? had : comp).push_back(i);
        if (!comp.empty()) {
            const MeasureResult res = measure_computational(s, comp, rng);
            for (std::size_t k = 0; k < comp.size(); ++k) {
                CHECK(res.outcome.bit(k) == x.bit(comp[k]));
            }
        }
        if (!had.empty()) {
            const MeasureResult res = measure_hadamard(s, had, rng);
            for (std::size_t k = 0; k < had.size(); ++k) {
                CHECK(res.outcome.bit(k) == x.bit(had[k]));
            }
        }
    }
}

TEST_CASE("Born-rule statistics within the TV bound") {
    Rng rng(Rng::Seed{});
    // A 3-qubit state with unequal weights: BB84 then one extra Hadamard.
    SparseState s = prepare_bb84(bs("101"), bs("011"));
    s = apply_h(s, 0);
    const auto qubits = s.layout().all_qubits();
    const auto exact = outcome_distribution(s, qubits);

    const int N = 10000;
    std::map<BitString, int> counts;
    for (int i = 0; i < N; ++i) {
        Rng trial = rng.derive(static_cast<std::uint64_t>(i));
        counts[measure_computational(s, qubits, trial).outcome]++;
    }
    double tv = 0.0;
    for (const auto& [outcome, p] : exact) {
        const auto it = counts.find(outcome);
        const double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / N;
        tv += std::abs(emp - p);
    }
    for (const auto& [outcome, c] : counts) {
        if (!exact.count(outcome)) tv += static_cast<double>(c) / N;
    }
    tv *= 0.5;
    const double bound = 5.0 * std::sqrt(static_cast<double>(exact.size()) / N);
    CHECK(tv <= bound);
}

TEST_CASE("measure_hadamard samples the rotate-then-measure distribution") {
    Rng rng(Rng::Seed{});
    SparseState s = prepare_bb84(bs("110"), bs("010"));
    s = apply_h(s, 2);
    const auto qubits = s.layout().all_qubits();

    SparseState rotated = s;
    for (std::size_t q : qubits) rotated = apply_h(rotated, q);
    const auto exact = outcome_distribution(rotated, qubits);

    const int N = 4000;
    std::map<BitString, int> counts;
    for (int i = 0; i < N; ++i) {
        Rng trial = rng.derive(static_cast<std::uint64_t>(i));
        counts[measure_hadamard(s, qubits, trial).outcome]++;
    }
    double tv = 0.0;
    for (const auto& [outcome, p] : exact) {
        const auto it = counts.find(outcome);
        tv += std::abs((it == counts.end() ? 0.0 : static_cast<double>(it->second) / N) - p);
    }
    for (const auto& [outcome, c] : counts) {
        if (!exact.count(outcome)) tv += static_cast<double>(c) / N;
    }
    tv *= 0.5;
    CHECK(tv <= 5.0 * std::sqrt(static_cast<double>(exact.size()) / N));
}

TEST_CASE("serialization round trip with canonical label order") {
    Rng rng(Rng::Seed{});
    SparseState s = tensor_zero_register(prepare_bb84(rng.bits(3), rng.bits(3)), "SIG", 2);
    s = append_classical_function(s, "MSG", "SIG",
                                  [](const BitString& m) { return m.slice(1, 2); });
    const std::string json = s.to_json();
    const SparseState back = SparseState::from_json(json);
    CHECK(back.same_support(s));
    CHECK(back.max_amplitude_delta(s) == 0.0);
    CHECK(back.layout() == s.layout());
    CHECK(back.to_json() == json);  // canonical form is stable

    // Labels appear in increasing order.
    std::string previous;
    for (const auto& [label, amp] : s.amplitudes()) {
        CHECK(previous <= label.to_hex());
        previous = label.to_hex();
    }

    CHECK_THROWS_AS(SparseState::from_json("not json"), FormatError);
    CHECK_THROWS_AS(SparseState::from_json("{\"layout\":[],\"amps\":[]}"), FormatError);
}
