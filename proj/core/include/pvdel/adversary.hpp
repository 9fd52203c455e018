#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvdel/layout.hpp"
#include "pvdel/payload.hpp"
#include "pvdel/scheme.hpp"

namespace pvdel {

/// Everything a game hands the adversary: the verification key, the signed
/// BB84 state, and (in the deletion game) the classical base ciphertext and
/// public key. Pointers are non-owning; null means "not part of this game".
struct GameView {
    const SigParams* sig = nullptr;
    std::size_t lambda = 0;
    const VerificationKey* vk = nullptr;
    const SparseState* psi = nullptr;
    const Bytes* base_ct = nullptr;
    const Bytes* pk = nullptr;
};

/// One exact outcome path of a strategy: its Born probability, the submitted
/// certificate, and the pure state left on the strategy's residual registers.
struct AdversaryBranch {
    double probability = 0.0;
    DeletionCertificate cert;
    SparseState residual;
};

/// One sampled run of a strategy.
struct AdversaryAction {
    DeletionCertificate cert;
    std::optional<SparseState> residual;
};

/// A deletion-game strategy. enumerate() lists every outcome path with exact
/// probabilities (feasible at oracle scale); act() plays a single sampled
/// trial. The default act() Born-samples a branch of enumerate(), which is
/// exactly the strategy's measurement; strategies whose enumeration blows up
/// at game scale override it.
class Adversary {
public:
    virtual ~Adversary() = default;

    virtual std::string name() const = 0;
    /// Registers the strategy keeps after the game; width 0 when it keeps
    /// nothing. Must fit the density cap when an exact distance is requested.
    virtual RegisterLayout residual_layout(const GameView& view) const;
    virtual std::vector<AdversaryBranch> enumerate(const GameView& view, Rng& rng) const = 0;
    virtual AdversaryAction act(const GameView& view, Rng& rng) const;
};

/// Shipped strategy family:
///   honest        measure everything, submit the outcome
///   hadamard-all  Hadamard-measure MSG, submit with the measured SIG branch
///   partial-keep1 / partial-keep2
///                 keep 1 or 2 MSG qubits unmeasured, guess those positions
///   sig-only      measure SIG only, reconstruct the message from vk
///   guess         submit a uniformly random certificate, measure nothing
///   bitflip       measure, flip every message bit, forge preimages (reads
///                 them off vk when the backend is invertible)
std::unique_ptr<Adversary> make_adversary(std::string_view name);
std::vector<std::string> adversary_names();

} // namespace pvdel
