#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "pvdel/bitstring.hpp"
#include "pvdel/layout.hpp"
#include "pvdel/rng.hpp"

namespace pvdel {

/// Resource caps for the simulator. Both are configurable; the defaults bound
/// worst-case exponential blow-up explicitly.
struct Limits {
    std::size_t support_cap = std::size_t{1} << 24;
    std::size_t density_cap_qubits = 10;
};

/// Amplitudes smaller than this are pruned after every transformation.
inline constexpr double kAmpPrune = 1e-12;
/// Norm and hermiticity tolerance.
inline constexpr double kNormTol = 1e-9;

/// Pure state over labeled bit registers, stored as a sparse map from basis
/// label to complex amplitude. Keys all have the layout's full width and the
/// map order (lexicographic by label) is the canonical order for iteration,
/// serialization, and equality.
///
/// States are immutable values: every operation returns a new state.
class SparseState {
public:
    using Amplitude = std::complex<double>;
    using AmpMap = std::map<BitString, Amplitude>;

    /// Validates key widths, prunes tiny amplitudes, checks unit norm.
    SparseState(RegisterLayout layout, AmpMap amps);
    static SparseState basis(RegisterLayout layout, const BitString& label);

    const RegisterLayout& layout() const { return layout_; }
    const AmpMap& amplitudes() const { return amps_; }
    std::size_t support_size() const { return amps_.size(); }
    double norm_sq() const;
    Amplitude amplitude(const BitString& label) const;

    bool same_support(const SparseState& other) const;
    /// Max |a - b| over the union of supports.
    double max_amplitude_delta(const SparseState& other) const;

    /// { "layout": [{name,width}...], "amps": [[hex-label, re, im]...] } with
    /// labels in lexicographic order, hex-packed MSB-first.
    std::string to_json() const;
    static SparseState from_json(std::string_view text);

private:
    RegisterLayout layout_;
    AmpMap amps_;
};

/// BB84 state over a single MSG register: tensor of H^theta_i |x_i>.
SparseState prepare_bb84(const BitString& x, const BitString& theta);

/// Exact Hadamard on one qubit.
SparseState apply_h(const SparseState& state, std::size_t qubit, const Limits& limits = {});

/// Reversible XOR embedding of a classical function: label (m, t, rest) with
/// m on src and t on dst maps to (m, t ^ g(m), rest). Self-inverse.
SparseState append_classical_function(const SparseState& state, std::string_view src,
                                      std::string_view dst,
                                      const std::function<BitString(const BitString&)>& g);

struct MeasureResult {
    BitString outcome;   // bits in the order the qubits were listed
    SparseState post;    // renormalized projection, full width
    double probability;  // Born probability of the outcome
};

/// Computational-basis measurement of the listed qubits, sampled by the Born
/// rule through rng.
MeasureResult measure_computational(const SparseState& state, std::span<const std::size_t> qubits,
                                    Rng& rng);

/// Hadamard-basis measurement: apply_h on each listed qubit, then measure
/// them computationally.
MeasureResult measure_hadamard(const SparseState& state, std::span<const std::size_t> qubits,
                               Rng& rng, const Limits& limits = {});

/// Exact outcome distribution of a computational measurement (no sampling).
std::map<BitString, double> outcome_distribution(const SparseState& state,
                                                 std::span<const std::size_t> qubits);

/// Appends a fresh all-zero register on the right.
SparseState tensor_zero_register(const SparseState& state, std::string_view name,
                                 std::size_t width);

} // namespace pvdel
