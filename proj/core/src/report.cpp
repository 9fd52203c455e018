#include "pvdel/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace pvdel {

void ExperimentReport::validate() const {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(acceptance_rate) || !in_unit(forge_rate)) {
        throw std::invalid_argument("report rates must lie in [0,1]");
    }
    if (win_rate && !in_unit(*win_rate)) {
        throw std::invalid_argument("report win rate must lie in [0,1]");
    }
    if (trace_distance && (*trace_distance < 0.0 || *trace_distance > 1.0 + 1e-9)) {
        throw std::invalid_argument("trace distance outside [0, 1+1e-9]");
    }
}

std::string ExperimentReport::to_json() const {
    validate();
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["adversary"] = adversary;
    j["backend"] = backend;
    j["base"] = base;
    j["lambda"] = lambda;
    j["preimage_bits"] = preimage_bits;
    j["seed"] = seed_hex;
    j["trials"] = trials;
    j["acceptance_rate"] = acceptance_rate;
    j["forge_rate"] = forge_rate;
    if (win_rate) j["win_rate"] = *win_rate;
    if (trace_distance) {
        j["trace_distance"] = *trace_distance;
        j["td_exact"] = td_exact;
        j["td_vacuous"] = td_vacuous;
    }
    if (posterior_min) j["posterior_min"] = *posterior_min;
    if (posterior_max) j["posterior_max"] = *posterior_max;
    j["transcripts"] = nlohmann::ordered_json::array();
    for (const auto& t : transcripts) {
        j["transcripts"].push_back({{"trial", t.trial},
                                    {"accepted", t.accepted},
                                    {"forge", t.forge},
                                    {"x", t.x_hex},
                                    {"theta", t.theta_hex},
                                    {"x_prime", t.x_prime_hex}});
    }
    return j.dump(2) + "\n";
}

} // namespace pvdel
