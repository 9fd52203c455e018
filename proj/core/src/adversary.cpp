#include "pvdel/adversary.hpp"

#include <stdexcept>

namespace pvdel {

namespace {

struct LabelParts {
    BitString msg;
    BitString sig;
    double probability;
};

std::vector<LabelParts> support_parts(const GameView& view) {
    const Register& msg = view.psi->layout().at(kMsgRegister);
    const Register& sig = view.psi->layout().at(kSigRegister);
    std::vector<LabelParts> parts;
    parts.reserve(view.psi->support_size());
    for (const auto& [label, amp] : view.psi->amplitudes()) {
        parts.push_back({label.slice(msg.offset, msg.width), label.slice(sig.offset, sig.width),
                         std::norm(amp)});
    }
    return parts;
}

DeletionCertificate make_cert(const GameView& view, BitString x_prime, const BitString& sig_bits) {
    DeletionCertificate cert;
    cert.x_prime = std::move(x_prime);
    cert.sigma_prime = Signature::from_bits(*view.sig, sig_bits);
    return cert;
}

SparseState empty_residual() {
    return SparseState::basis(RegisterLayout{}, BitString{});
}

// Relabels the given qubits of a state onto a fresh layout. Valid when every
// other qubit is classical (fully measured), so labels differ only on the
// kept qubits.
SparseState restrict_to_qubits(const SparseState& state, std::span<const std::size_t> qubits,
                               RegisterLayout layout) {
    SparseState::AmpMap amps;
    for (const auto& [label, amp] : state.amplitudes()) {
        BitString kept(qubits.size());
        for (std::size_t k = 0; k < qubits.size(); ++k) kept.set_bit(k, label.bit(qubits[k]));
        amps[kept] += amp;
    }
    return SparseState(std::move(layout), std::move(amps));
}

std::pair<BitString, BitString> split_outcome(const GameView& view, const BitString& outcome) {
    return {outcome.slice(0, view.lambda),
            outcome.slice(view.lambda, view.sig->signature_bits())};
}

class HonestDeleter final : public Adversary {
public:
    std::string name() const override { return "honest"; }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng&) const override {
        std::vector<AdversaryBranch> branches;
        for (auto& part : support_parts(view)) {
            branches.push_back(
                {part.probability, make_cert(view, part.msg, part.sig), empty_residual()});
        }
        return branches;
    }

    AdversaryAction act(const GameView& view, Rng& rng) const override {
        const auto all = view.psi->layout().all_qubits();
        const MeasureResult res = measure_computational(*view.psi, all, rng);
        auto [msg, sig] = split_outcome(view, res.outcome);
        return {make_cert(view, std::move(msg), sig), empty_residual()};
    }
};

// Applies H to every message qubit before measuring, so the submitted string
// is the Hadamard-basis outcome while the signature register is measured
// honestly. Landing back on the signed branch happens only by chance.
class HadamardAll final : public Adversary {
public:
    std::string name() const override { return "hadamard-all"; }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng&) const override {
        if (view.lambda > 20) throw std::invalid_argument("hadamard-all enumeration too large");
        const double y_weight = std::pow(0.5, static_cast<double>(view.lambda));
        std::vector<AdversaryBranch> branches;
        for (auto& part : support_parts(view)) {
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << view.lambda); ++y) {
                branches.push_back({part.probability * y_weight,
                                    make_cert(view, BitString::from_uint(y, view.lambda),
                                              part.sig),
                                    empty_residual()});
            }
        }
        return branches;
    }

    AdversaryAction act(const GameView& view, Rng& rng) const override {
        const auto sig_qubits = view.psi->layout().qubits(kSigRegister);
        const MeasureResult sig_res = measure_computational(*view.psi, sig_qubits, rng);
        const auto msg_qubits = view.psi->layout().qubits(kMsgRegister);
        const MeasureResult msg_res = measure_hadamard(sig_res.post, msg_qubits, rng);
        return {make_cert(view, msg_res.outcome, sig_res.outcome), std::nullopt};
    }
};

// Measures the signature register and all but the first k message qubits;
// the kept qubits stay unmeasured and the matching certificate positions are
// guessed. Branch collapse per support label is exact as long as distinct
// messages carry distinct signatures, which random preimages give.
class PartialKeep final : public Adversary {
public:
    explicit PartialKeep(std::size_t keep) : keep_(keep) {}

    std::string name() const override { return "partial-keep" + std::to_string(keep_); }

    RegisterLayout residual_layout(const GameView& view) const override {
        return RegisterLayout({{"KEEP", kept_width(view)}});
    }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng&) const override {
        const std::size_t k = kept_width(view);
        const RegisterLayout residual = residual_layout(view);
        const double guess_weight = std::pow(0.5, static_cast<double>(k));
        std::vector<AdversaryBranch> branches;
        for (auto& part : support_parts(view)) {
            const BitString kept = part.msg.slice(0, k);
            for (std::uint64_t g = 0; g < (std::uint64_t{1} << k); ++g) {
                BitString x_prime = part.msg;
                x_prime.splice(0, BitString::from_uint(g, k));
                branches.push_back({part.probability * guess_weight,
                                    make_cert(view, std::move(x_prime), part.sig),
                                    SparseState::basis(residual, kept)});
            }
        }
        return branches;
    }

    AdversaryAction act(const GameView& view, Rng& rng) const override {
        const std::size_t k = kept_width(view);
        std::vector<std::size_t> measured;
        for (std::size_t q = k; q < view.psi->layout().width(); ++q) measured.push_back(q);
        const MeasureResult res = measure_computational(*view.psi, measured, rng);

        BitString x_prime(view.lambda);
        x_prime.splice(0, rng.bits(k));
        x_prime.splice(k, res.outcome.slice(0, view.lambda - k));
        const BitString sig_bits =
            res.outcome.slice(view.lambda - k, view.sig->signature_bits());

        std::vector<std::size_t> kept_qubits(k);
        for (std::size_t q = 0; q < k; ++q) kept_qubits[q] = q;
        return {make_cert(view, std::move(x_prime), sig_bits),
                restrict_to_qubits(res.post, kept_qubits, residual_layout(view))};
    }

private:
    std::size_t kept_width(const GameView& view) const {
        return keep_ < view.lambda ? keep_ : view.lambda;
    }

    std::size_t keep_;
};

// Measures only the signature register, then reconstructs the message it is
// consistent with by matching each chunk against the public images.
class SigOnly final : public Adversary {
public:
    std::string name() const override { return "sig-only"; }

    RegisterLayout residual_layout(const GameView& view) const override {
        return RegisterLayout({{"KEEP", view.lambda}});
    }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng&) const override {
        const SigBackend backend = resolve_sig_backend_memoized(*view.sig);
        const RegisterLayout residual = residual_layout(view);
        std::vector<AdversaryBranch> branches;
        for (auto& part : support_parts(view)) {
            branches.push_back({part.probability,
                                make_cert(view, recover(view, backend, part.sig), part.sig),
                                SparseState::basis(residual, part.msg)});
        }
        return branches;
    }

    AdversaryAction act(const GameView& view, Rng& rng) const override {
        const SigBackend backend = resolve_sig_backend(*view.sig);
        const auto sig_qubits = view.psi->layout().qubits(kSigRegister);
        const MeasureResult res = measure_computational(*view.psi, sig_qubits, rng);
        const auto msg_qubits = view.psi->layout().qubits(kMsgRegister);
        return {make_cert(view, recover(view, backend, res.outcome), res.outcome),
                restrict_to_qubits(res.post, msg_qubits, residual_layout(view))};
    }

private:
    BitString recover(const GameView& view, const SigBackend& backend,
                      const BitString& sig_bits) const {
        const Signature sigma = Signature::from_bits(*view.sig, sig_bits);
        BitString recovered(view.lambda);
        for (std::size_t i = 0; i < view.lambda; ++i) {
            const BitString image = backend.owf.eval(sigma.chunks[i]);
            recovered.set_bit(i, image == view.vk->images[i][1]);
        }
        return recovered;
    }
};

// Submits a uniformly random certificate without touching the state.
class RandomGuess final : public Adversary {
public:
    std::string name() const override { return "guess"; }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng& rng) const override {
        DeletionCertificate cert;
        cert.x_prime = rng.bits(view.lambda);
        cert.sigma_prime = Signature::from_bits(*view.sig, rng.bits(view.sig->signature_bits()));
        return {{1.0, std::move(cert), empty_residual()}};
    }
};

// Measures honestly, then claims the complement of the measured message.
// With an invertible backend the needed preimages are read straight off vk;
// otherwise they are blind random guesses.
class BitFlipForger final : public Adversary {
public:
    std::string name() const override { return "bitflip"; }

    std::vector<AdversaryBranch> enumerate(const GameView& view, Rng& rng) const override {
        const SigBackend backend = resolve_sig_backend(*view.sig);
        std::vector<AdversaryBranch> branches;
        for (auto& part : support_parts(view)) {
            branches.push_back(
                {part.probability, forge(view, backend, part.msg, rng), empty_residual()});
        }
        return branches;
    }

    AdversaryAction act(const GameView& view, Rng& rng) const override {
        const SigBackend backend = resolve_sig_backend(*view.sig);
        const auto all = view.psi->layout().all_qubits();
        const MeasureResult res = measure_computational(*view.psi, all, rng);
        auto [msg, sig] = split_outcome(view, res.outcome);
        return {forge(view, backend, msg, rng), empty_residual()};
    }

private:
    DeletionCertificate forge(const GameView& view, const SigBackend& backend,
                              const BitString& measured_msg, Rng& rng) const {
        const BitString flipped = measured_msg.flipped();
        Signature forged;
        forged.chunks.reserve(view.lambda);
        for (std::size_t i = 0; i < view.lambda; ++i) {
            const BitString& image = view.vk->images[i][flipped.bit(i) ? 1 : 0];
            forged.chunks.push_back(backend.owf.invert ? backend.owf.invert(image)
                                                       : rng.bits(view.sig->preimage_bits));
        }
        DeletionCertificate cert;
        cert.x_prime = flipped;
        cert.sigma_prime = std::move(forged);
        return cert;
    }
};

} // namespace

RegisterLayout Adversary::residual_layout(const GameView&) const {
    return RegisterLayout{};
}

AdversaryAction Adversary::act(const GameView& view, Rng& rng) const {
    auto branches = enumerate(view, rng);
    double total = 0.0;
    for (const auto& b : branches) total += b.probability;
    const double draw = rng.uniform() * total;
    double acc = 0.0;
    const AdversaryBranch* chosen = &branches.back();
    for (const auto& b : branches) {
        acc += b.probability;
        if (draw < acc) {
            chosen = &b;
            break;
        }
    }
    return {chosen->cert, chosen->residual};
}

std::unique_ptr<Adversary> make_adversary(std::string_view name) {
    if (name == "honest") return std::make_unique<HonestDeleter>();
    if (name == "hadamard-all") return std::make_unique<HadamardAll>();
    if (name == "partial-keep1") return std::make_unique<PartialKeep>(1);
    if (name == "partial-keep2") return std::make_unique<PartialKeep>(2);
    if (name == "sig-only") return std::make_unique<SigOnly>();
    if (name == "guess") return std::make_unique<RandomGuess>();
    if (name == "bitflip") return std::make_unique<BitFlipForger>();
    std::string known;
    for (const auto& n : adversary_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw std::invalid_argument("unknown adversary '" + std::string(name) + "' (known: " + known +
                                ")");
}

std::vector<std::string> adversary_names() {
    return {"honest", "hadamard-all", "partial-keep1", "partial-keep2",
            "sig-only", "guess",        "bitflip"};
}

} // namespace pvdel
