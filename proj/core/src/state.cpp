#include "pvdel/state.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "pvdel/errors.hpp"

namespace pvdel {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_norm(double norm_sq) {
    if (std::abs(norm_sq - 1.0) > kNormTol) {
        throw std::invalid_argument("state norm " + std::to_string(norm_sq) +
                                    " outside unit tolerance");
    }
}

} // namespace

SparseState::SparseState(RegisterLayout layout, AmpMap amps)
    : layout_(std::move(layout)) {
    double norm_sq = 0.0;
    for (auto& [label, amp] : amps) {
        if (label.size() != layout_.width()) {
            throw std::invalid_argument("amplitude label width does not match layout");
        }
        if (std::abs(amp) < kAmpPrune) continue;
        norm_sq += std::norm(amp);
        amps_.emplace(label, amp);
    }
    if (amps_.empty()) throw std::invalid_argument("state has empty support");
    check_norm(norm_sq);
}

SparseState SparseState::basis(RegisterLayout layout, const BitString& label) {
    AmpMap amps;
    amps.emplace(label, Amplitude{1.0, 0.0});
    return SparseState(std::move(layout), std::move(amps));
}

double SparseState::norm_sq() const {
    double n = 0.0;
    for (const auto& [label, amp] : amps_) n += std::norm(amp);
    return n;
}

SparseState::Amplitude SparseState::amplitude(const BitString& label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? Amplitude{0.0, 0.0} : it->second;
}

bool SparseState::same_support(const SparseState& other) const {
    if (amps_.size() != other.amps_.size()) return false;
    auto a = amps_.begin();
    auto b = other.amps_.begin();
    for (; a != amps_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
    }
    return true;
}

double SparseState::max_amplitude_delta(const SparseState& other) const {
    double worst = 0.0;
    for (const auto& [label, amp] : amps_) {
        worst = std::max(worst, std::abs(amp - other.amplitude(label)));
    }
    for (const auto& [label, amp] : other.amps_) {
        worst = std::max(worst, std::abs(amp - amplitude(label)));
    }
    return worst;
}

std::string SparseState::to_json() const {
    nlohmann::ordered_json j;
    j["layout"] = nlohmann::ordered_json::array();
    for (const auto& r : layout_.registers()) {
        j["layout"].push_back({{"name", r.name}, {"width", r.width}});
    }
    j["amps"] = nlohmann::ordered_json::array();
    for (const auto& [label, amp] : amps_) {
        j["amps"].push_back({label.to_hex(), amp.real(), amp.imag()});
    }
    return j.dump();
}

SparseState SparseState::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("state JSON parse error: ") + e.what());
    }
    try {
        std::vector<std::pair<std::string, std::size_t>> regs;
        for (const auto& r : j.at("layout")) {
            regs.emplace_back(r.at("name").get<std::string>(), r.at("width").get<std::size_t>());
        }
        RegisterLayout layout(std::move(regs));
        AmpMap amps;
        for (const auto& entry : j.at("amps")) {
            const auto label = BitString::from_hex(entry.at(0).get<std::string>(), layout.width());
            amps.emplace(label, Amplitude{entry.at(1).get<double>(), entry.at(2).get<double>()});
        }
        return SparseState(std::move(layout), std::move(amps));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("state JSON schema error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("state JSON invalid: ") + e.what());
    }
}

SparseState prepare_bb84(const BitString& x, const BitString& theta) {
    if (x.size() != theta.size()) throw std::invalid_argument("x and theta lengths differ");
    const std::size_t lambda = x.size();
    if (lambda == 0) throw std::invalid_argument("BB84 state needs at least one qubit");

    std::vector<std::size_t> hadamard_positions;
    for (std::size_t i = 0; i < lambda; ++i) {
        if (theta.bit(i)) hadamard_positions.push_back(i);
    }
    const std::size_t h = hadamard_positions.size();
    const double magnitude = std::pow(2.0, -static_cast<double>(h) / 2.0);

    SparseState::AmpMap amps;
    // Enumerate assignments of the Hadamard positions; computational positions
    // carry x_i. Sign is (-1)^<x,z> restricted to Hadamard positions.
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << h); ++assign) {
        BitString label = x;
        bool sign = false;
        for (std::size_t k = 0; k < h; ++k) {
            const bool z = (assign >> k) & 1;
            label.set_bit(hadamard_positions[k], z);
            if (z && x.bit(hadamard_positions[k])) sign = !sign;
        }
        amps.emplace(std::move(label),
                     SparseState::Amplitude{sign ? -magnitude : magnitude, 0.0});
    }
    return SparseState(RegisterLayout({{"MSG", lambda}}), std::move(amps));
}

SparseState apply_h(const SparseState& state, std::size_t qubit, const Limits& limits) {
    if (qubit >= state.layout().width()) throw std::invalid_argument("qubit index out of range");

    SparseState::AmpMap out;
    for (const auto& [label, amp] : state.amplitudes()) {
        BitString partner = label;
        partner.set_bit(qubit, !label.bit(qubit));
        // H|0> = (|0>+|1>)/sqrt2, H|1> = (|0>-|1>)/sqrt2.
        const auto direct = amp * kInvSqrt2;
        out[label] += label.bit(qubit) ? -direct : direct;
        out[partner] += direct;
        if (out.size() > limits.support_cap) {
            throw CapExceeded("support cap exceeded while applying Hadamard");
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (std::abs(it->second) < kAmpPrune) {
            it = out.erase(it);
        } else {
            ++it;
        }
    }
    return SparseState(state.layout(), std::move(out));
}

SparseState append_classical_function(const SparseState& state, std::string_view src,
                                      std::string_view dst,
                                      const std::function<BitString(const BitString&)>& g) {
    const Register& s = state.layout().at(src);
    const Register& d = state.layout().at(dst);

    SparseState::AmpMap out;
    for (const auto& [label, amp] : state.amplitudes()) {
        const BitString m = label.slice(s.offset, s.width);
        const BitString image = g(m);
        if (image.size() != d.width) {
            throw std::invalid_argument("classical function output width does not match register");
        }
        BitString next = label;
        next.splice(d.offset, label.slice(d.offset, d.width) ^ image);
        out.emplace(std::move(next), amp);
    }
    return SparseState(state.layout(), std::move(out));
}

namespace {

// Contiguous ascending runs admit a byte-wise slice of the label.
std::optional<std::size_t> contiguous_start(std::span<const std::size_t> qubits) {
    if (qubits.empty()) return std::nullopt;
    for (std::size_t k = 1; k < qubits.size(); ++k) {
        if (qubits[k] != qubits[k - 1] + 1) return std::nullopt;
    }
    return qubits.front();
}

BitString extract_bits(const BitString& label, std::span<const std::size_t> qubits,
                       const std::optional<std::size_t>& run_start) {
    if (run_start) return label.slice(*run_start, qubits.size());
    BitString outcome(qubits.size());
    for (std::size_t k = 0; k < qubits.size(); ++k) outcome.set_bit(k, label.bit(qubits[k]));
    return outcome;
}

} // namespace

std::map<BitString, double> outcome_distribution(const SparseState& state,
                                                 std::span<const std::size_t> qubits) {
    for (std::size_t q : qubits) {
        if (q >= state.layout().width()) throw std::invalid_argument("qubit index out of range");
    }
    const auto run_start = contiguous_start(qubits);
    std::map<BitString, double> dist;
    for (const auto& [label, amp] : state.amplitudes()) {
        dist[extract_bits(label, qubits, run_start)] += std::norm(amp);
    }
    return dist;
}

MeasureResult measure_computational(const SparseState& state,
                                    std::span<const std::size_t> qubits, Rng& rng) {
    auto dist = outcome_distribution(state, qubits);

    double total = 0.0;
    for (const auto& [outcome, p] : dist) total += p;

    // Walk the cumulative distribution in canonical label order.
    const double draw = rng.uniform() * total;
    double acc = 0.0;
    BitString chosen;
    double chosen_p = 0.0;
    for (const auto& [outcome, p] : dist) {
        acc += p;
        chosen = outcome;
        chosen_p = p;
        if (draw < acc) break;
    }

    const auto run_start = contiguous_start(qubits);
    SparseState::AmpMap post;
    const double scale = 1.0 / std::sqrt(chosen_p);
    for (const auto& [label, amp] : state.amplitudes()) {
        if (extract_bits(label, qubits, run_start) == chosen) post.emplace(label, amp * scale);
    }
    return MeasureResult{std::move(chosen), SparseState(state.layout(), std::move(post)),
                         chosen_p};
}

MeasureResult measure_hadamard(const SparseState& state, std::span<const std::size_t> qubits,
                               Rng& rng, const Limits& limits) {
    // One qubit at a time: rotate, measure, collapse. Hadamards on distinct
    // qubits commute with measurements of other qubits, so this samples the
    // same joint distribution as rotating everything first, while the
    // support never compounds across positions.
    SparseState current = state;
    BitString outcome(qubits.size());
    double probability = 1.0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const std::size_t q = qubits[k];
        const SparseState rotated = apply_h(current, q, limits);
        MeasureResult step = measure_computational(rotated, std::span(&q, 1), rng);
        outcome.set_bit(k, step.outcome.bit(0));
        probability *= step.probability;
        current = std::move(step.post);
    }
    return MeasureResult{std::move(outcome), std::move(current), probability};
}

SparseState tensor_zero_register(const SparseState& state, std::string_view name,
                                 std::size_t width) {
    std::vector<std::pair<std::string, std::size_t>> regs;
    for (const auto& r : state.layout().registers()) regs.emplace_back(r.name, r.width);
    regs.emplace_back(std::string(name), width);
    RegisterLayout layout(std::move(regs));

    const BitString zeros(width);
    SparseState::AmpMap amps;
    for (const auto& [label, amp] : state.amplitudes()) {
        amps.emplace(label.concat(zeros), amp);
    }
    return SparseState(std::move(layout), std::move(amps));
}

} // namespace pvdel
